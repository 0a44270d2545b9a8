// Copyright 2026 The polydec Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "polydec/io.h"

#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_split.h"
#include "absl/strings/strip.h"

namespace polydec {
namespace {

using Json = nlohmann::json;

absl::StatusOr<Json> ParseJson(std::string_view text) {
  Json json = Json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (json.is_discarded()) return absl::InvalidArgumentError("malformed JSON");
  return json;
}

template <typename T>
absl::StatusOr<T> Field(const Json& json, const char* key) {
  if (!json.is_object() || !json.contains(key)) {
    return absl::InvalidArgumentError(absl::StrCat("missing field \"", key, "\""));
  }
  try {
    return json.at(key).get<T>();
  } catch (const Json::exception& e) {
    return absl::InvalidArgumentError(
        absl::StrCat("field \"", key, "\": ", e.what()));
  }
}

}  // namespace

absl::StatusOr<std::string> ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return absl::NotFoundError(absl::StrCat("cannot open ", path));
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

absl::Status WriteFile(const std::string& path, std::string_view contents) {
  const std::filesystem::path parent = std::filesystem::path(path).parent_path();
  std::error_code ignored;
  if (!parent.empty()) std::filesystem::create_directories(parent, ignored);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) return absl::PermissionDeniedError(absl::StrCat("cannot write ", path));
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) return absl::DataLossError(absl::StrCat("short write to ", path));
  return absl::OkStatus();
}

std::string FormatDouble(double value) { return absl::StrFormat("%.17g", value); }

std::string DecompositionToJson(const Decomposition& decomposition) {
  Json pairs = Json::array();
  for (const DecompositionPair& pair : decomposition.pairs) {
    Json entry;
    entry["p"] = pair.probability;
    if (pair.vertex.is_integral()) {
      entry["set"] = pair.vertex.indices();
    } else {
      entry["set"] = Json{{"half", pair.vertex.half_values()}};
    }
    pairs.push_back(std::move(entry));
  }
  Json out;
  out["pairs"] = std::move(pairs);
  out["residual"] = decomposition.residual;
  out["iterations"] = decomposition.iterations;
  return out.dump();
}

absl::StatusOr<Decomposition> DecompositionFromJson(std::string_view text,
                                                    int dimension) {
  absl::StatusOr<Json> json = ParseJson(text);
  if (!json.ok()) return json.status();
  Decomposition out;
  absl::StatusOr<Json> pairs = Field<Json>(*json, "pairs");
  if (!pairs.ok()) return pairs.status();
  if (!pairs->is_array()) return absl::InvalidArgumentError("pairs must be a list");
  for (const Json& entry : *pairs) {
    absl::StatusOr<double> p = Field<double>(entry, "p");
    if (!p.ok()) return p.status();
    absl::StatusOr<Json> set = Field<Json>(entry, "set");
    if (!set.ok()) return set.status();
    absl::StatusOr<VertexSet> vertex;
    if (set->is_array()) {
      std::vector<int> indices;
      try {
        indices = set->get<std::vector<int>>();
      } catch (const Json::exception& e) {
        return absl::InvalidArgumentError(absl::StrCat("set: ", e.what()));
      }
      vertex = VertexSet::Integral(dimension, std::move(indices));
    } else {
      absl::StatusOr<std::vector<double>> half =
          Field<std::vector<double>>(*set, "half");
      if (!half.ok()) return half.status();
      if (static_cast<int>(half->size()) != dimension) {
        return absl::InvalidArgumentError("half-integral vertex has wrong length");
      }
      vertex = VertexSet::HalfIntegral(*std::move(half));
    }
    if (!vertex.ok()) return vertex.status();
    out.pairs.push_back({*p, *std::move(vertex)});
  }
  try {
    out.residual = json->value("residual", 0.0);
    out.iterations =
        json->value("iterations", static_cast<int>(out.pairs.size()));
  } catch (const Json::exception& e) {
    return absl::InvalidArgumentError(e.what());
  }
  return out;
}

std::string CoverageToJson(const CoverageInstance& instance) {
  Json out;
  out["n_sets"] = instance.num_sets;
  out["n_elements"] = instance.num_elements;
  out["weights"] = instance.weights;
  out["sets"] = instance.sets;
  return out.dump();
}

absl::StatusOr<CoverageInstance> CoverageFromJson(std::string_view text) {
  absl::StatusOr<Json> json = ParseJson(text);
  if (!json.ok()) return json.status();
  CoverageInstance out;
  absl::StatusOr<int> num_sets = Field<int>(*json, "n_sets");
  absl::StatusOr<int> num_elements = Field<int>(*json, "n_elements");
  absl::StatusOr<std::vector<double>> weights =
      Field<std::vector<double>>(*json, "weights");
  absl::StatusOr<std::vector<std::vector<int>>> sets =
      Field<std::vector<std::vector<int>>>(*json, "sets");
  for (const absl::Status& s : {num_sets.status(), num_elements.status(),
                                weights.status(), sets.status()}) {
    if (!s.ok()) return s;
  }
  out.num_sets = *num_sets;
  out.num_elements = *num_elements;
  out.weights = *std::move(weights);
  out.sets = *std::move(sets);
  if (absl::Status s = out.Validate(); !s.ok()) return s;
  return out;
}

absl::StatusOr<PartitionMatroid> PartitionFromJson(std::string_view text) {
  absl::StatusOr<Json> json = ParseJson(text);
  if (!json.ok()) return json.status();
  absl::StatusOr<std::vector<std::vector<int>>> blocks =
      Field<std::vector<std::vector<int>>>(*json, "blocks");
  if (!blocks.ok()) return blocks.status();
  absl::StatusOr<std::vector<int>> budgets =
      Field<std::vector<int>>(*json, "budgets");
  if (!budgets.ok()) return budgets.status();
  return PartitionMatroid{*std::move(blocks), *std::move(budgets)};
}

std::string PartitionToJson(const PartitionMatroid& spec) {
  Json out;
  out["blocks"] = spec.blocks;
  out["budgets"] = spec.budgets;
  return out.dump();
}

absl::StatusOr<std::vector<double>> ParsePoint(std::string_view raw) {
  absl::string_view text =
      absl::StripAsciiWhitespace(absl::string_view(raw.data(), raw.size()));
  if (absl::StartsWith(text, "[")) {
    absl::StatusOr<Json> json = ParseJson(std::string(text));
    if (!json.ok()) return json.status();
    try {
      return json->get<std::vector<double>>();
    } catch (const Json::exception& e) {
      return absl::InvalidArgumentError(e.what());
    }
  }
  std::vector<double> values;
  for (absl::string_view token :
       absl::StrSplit(text, absl::ByAnyChar(", \t\r\n"), absl::SkipEmpty())) {
    double v;
    if (!absl::SimpleAtod(token, &v)) {
      return absl::InvalidArgumentError(absl::StrCat("bad number \"", token, "\""));
    }
    values.push_back(v);
  }
  return values;
}

std::string FormatCsvRow(const BenchmarkRow& row) {
  return absl::StrCat(row.instance_id, ",", row.method, ",", row.k, ",",
                      FormatDouble(row.objective), ",",
                      FormatDouble(row.extension), ",",
                      absl::StrFormat("%.3f", row.time_ms), ",", row.seed, ",",
                      row.iterations);
}

std::string FormatCsv(std::span<const BenchmarkRow> rows) {
  std::string out = absl::StrCat(kResultsCsvHeader, "\n");
  for (const BenchmarkRow& row : rows) absl::StrAppend(&out, FormatCsvRow(row), "\n");
  return out;
}

}  // namespace polydec
