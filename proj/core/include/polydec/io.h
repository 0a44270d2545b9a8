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

// File formats: decomposition JSON, coverage instance JSON, partition blocks
// JSON, point lists and benchmark result CSV.

#ifndef POLYDEC_IO_H_
#define POLYDEC_IO_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "polydec/constraint.h"
#include "polydec/decomposition.h"
#include "polydec/objectives.h"

namespace polydec {

absl::StatusOr<std::string> ReadFile(const std::string& path);
// Creates missing parent directories.
absl::Status WriteFile(const std::string& path, std::string_view contents);

// {"pairs":[{"p":0.5,"set":[0,2]} | {"p":..,"set":{"half":[..]}}],
//  "residual":0.0,"iterations":2}
std::string DecompositionToJson(const Decomposition& decomposition);
absl::StatusOr<Decomposition> DecompositionFromJson(std::string_view text,
                                                    int dimension);

// {"n_sets":..,"n_elements":..,"weights":[..],"sets":[[..],..]}
std::string CoverageToJson(const CoverageInstance& instance);
absl::StatusOr<CoverageInstance> CoverageFromJson(std::string_view text);

// {"blocks":[[..],..],"budgets":[..]}
absl::StatusOr<PartitionMatroid> PartitionFromJson(std::string_view text);
std::string PartitionToJson(const PartitionMatroid& spec);

// A JSON array of numbers, or numbers separated by commas or whitespace.
absl::StatusOr<std::vector<double>> ParsePoint(std::string_view text);

// Round-trip exact decimal form of a double.
std::string FormatDouble(double value);

inline constexpr char kResultsCsvHeader[] =
    "instance_id,method,k,objective,extension,time_ms,seed,iterations";

struct BenchmarkRow {
  std::string instance_id;
  std::string method;
  int k = 0;
  double objective = 0.0;
  double extension = 0.0;
  double time_ms = 0.0;
  uint64_t seed = 0;
  int iterations = 0;
};

std::string FormatCsvRow(const BenchmarkRow& row);
// Header line followed by one line per row.
std::string FormatCsv(std::span<const BenchmarkRow> rows);

}  // namespace polydec

#endif  // POLYDEC_IO_H_
