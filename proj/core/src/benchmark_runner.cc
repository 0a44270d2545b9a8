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

#include "polydec/benchmark_runner.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <map>
#include <mutex>
#include <nlohmann/json.hpp>
#include <thread>
#include <tuple>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "polydec/generators.h"

namespace polydec {
namespace {

using Json = nlohmann::json;
using Clock = std::chrono::steady_clock;

absl::Status ParseSettings(const Json& json, MethodSettings& settings) {
  if (json.contains("random")) {
    const Json& r = json["random"];
    settings.random.trials = r.value("trials", settings.random.trials);
    settings.random.seconds = r.value("seconds", settings.random.seconds);
  }
  if (json.contains("optimize")) {
    const Json& o = json["optimize"];
    settings.optimize.steps = o.value("steps", settings.optimize.steps);
    settings.optimize.adam.learning_rate =
        o.value("lr", settings.optimize.adam.learning_rate);
    settings.optimize.round_every =
        o.value("round_every", settings.optimize.round_every);
  }
  if (json.contains("schedule")) {
    const Json& s = json["schedule"];
    settings.schedule.scales =
        s.value("scales", settings.schedule.scales);
    settings.schedule.per_scale = s.value("per_scale", settings.schedule.per_scale);
    settings.schedule.floor = s.value("floor", settings.schedule.floor);
    settings.schedule.tolerance = s.value("tolerance", settings.schedule.tolerance);
    settings.schedule.mixing = s.value("mixing", settings.schedule.mixing);
  }
  if (json.contains("local")) {
    settings.local_max_iter =
        json["local"].value("max_iter", settings.local_max_iter);
  }
  return absl::OkStatus();
}

absl::StatusOr<BenchmarkDataset> ParseDataset(const Json& json, uint64_t seed,
                                              const std::string& base_dir) {
  BenchmarkDataset dataset;
  dataset.name = json.value("name", std::string("dataset"));
  if (json.contains("files")) {
    for (const std::string& file : json["files"].get<std::vector<std::string>>()) {
      std::filesystem::path path(file);
      if (path.is_relative()) path = std::filesystem::path(base_dir) / path;
      absl::StatusOr<std::string> text = ReadFile(path.string());
      if (!text.ok()) return text.status();
      absl::StatusOr<CoverageInstance> instance = CoverageFromJson(*text);
      if (!instance.ok()) {
        return absl::Status(instance.status().code(),
                            absl::StrCat(path.string(), ": ",
                                         instance.status().message()));
      }
      dataset.instances.push_back(*std::move(instance));
    }
    return dataset;
  }
  CoverageGenParams params;
  params.num_sets = json.value("num_sets", params.num_sets);
  params.num_elements = json.value("num_elements", params.num_elements);
  params.min_degree = json.value("min_degree", params.min_degree);
  params.max_degree = json.value("max_degree", params.max_degree);
  params.min_weight = json.value("min_weight", params.min_weight);
  params.max_weight = json.value("max_weight", params.max_weight);
  const std::string generator = json.value("generator", std::string("uniform"));
  const int count = json.value("count", 1);
  const uint64_t dataset_seed = json.value("seed", seed);
  for (int i = 0; i < count; ++i) {
    absl::StatusOr<CoverageInstance> instance;
    if (generator == "uniform") {
      instance = GenerateRandomUniform(params, dataset_seed, i);
    } else if (generator == "pareto") {
      instance = GenerateRandomPareto(params, dataset_seed, i);
    } else {
      return absl::InvalidArgumentError(
          absl::StrCat("unknown generator \"", generator, "\""));
    }
    if (!instance.ok()) return instance.status();
    dataset.instances.push_back(*std::move(instance));
  }
  return dataset;
}

}  // namespace

absl::StatusOr<SolveResult> RunMethod(std::string_view method,
                                      const SetObjective& f,
                                      const ConstraintSpec& spec, int dimension,
                                      const MethodSettings& settings,
                                      uint64_t seed,
                                      const CoverageInstance* coverage) {
  if (method == "greedy") {
    const auto* c = std::get_if<Cardinality>(&spec);
    if (coverage == nullptr || c == nullptr) {
      return absl::InvalidArgumentError(
          "greedy needs a coverage instance under a cardinality constraint");
    }
    absl::StatusOr<SolveResult> result = GreedyCoverage(*coverage, c->k);
    if (result.ok()) result->seed = seed;
    return result;
  }
  if (method == "random") {
    return RandomBaseline(f, spec, dimension, settings.random, seed);
  }
  if (method == "random+decomp") {
    return RandomPointDecompBaseline(f, spec, dimension, seed);
  }
  if (method != "direct" && method != "direct+multiscale" &&
      method != "direct+local") {
    return absl::InvalidArgumentError(absl::StrCat("unknown method \"", std::string(method), "\""));
  }
  const auto start = Clock::now();
  OptimizeConfig optimize = settings.optimize;
  optimize.seed = seed;
  absl::StatusOr<SolveResult> direct = DirectOptimize(f, spec, dimension, optimize);
  if (!direct.ok() || method == "direct") return direct;

  SolveResult result = *std::move(direct);
  absl::StatusOr<MultiScaleResult> multi =
      MultiScaleSolve(result.point, settings.schedule, f, spec, seed);
  if (!multi.ok()) return multi.status();
  if (multi->result.objective > result.objective) {
    result.best = multi->result.best;
    result.objective = multi->result.objective;
  }
  result.method = std::string(method);
  if (method == "direct+local") {
    absl::StatusOr<std::vector<int>> improved =
        LocalImprove(result.best.indices(), multi->pool, f, spec, dimension,
                     settings.local_max_iter);
    if (!improved.ok()) return improved.status();
    const double value = f.ValueOfSet(*improved);
    if (value > result.objective) {
      result.best = VertexSet::FromUnsorted(dimension, *improved);
      result.objective = value;
    }
  }
  result.time_ms =
      std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return result;
}

absl::StatusOr<BenchmarkConfig> ParseBenchmarkConfig(std::string_view text,
                                                     const std::string& base_dir) {
  Json json = Json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (json.is_discarded() || !json.is_object()) {
    return absl::InvalidArgumentError("benchmark config is not a JSON object");
  }
  BenchmarkConfig config;
  try {
    config.seed = json.value("seed", uint64_t{0});
    config.threads = std::max(1, json.value("threads", 1));
    config.methods = json.value(
        "methods", std::vector<std::string>{"greedy", "random", "direct",
                                            "direct+local"});
    config.ks = json.value("k", std::vector<int>{10});
    config.plot_dir = json.value("plot_dir", std::string());
    if (absl::Status s = ParseSettings(json, config.settings); !s.ok()) return s;
    if (!json.contains("datasets") || !json["datasets"].is_array()) {
      return absl::InvalidArgumentError("config needs a \"datasets\" list");
    }
    for (const Json& entry : json["datasets"]) {
      absl::StatusOr<BenchmarkDataset> dataset =
          ParseDataset(entry, config.seed, base_dir);
      if (!dataset.ok()) return dataset.status();
      config.datasets.push_back(*std::move(dataset));
    }
  } catch (const Json::exception& e) {
    return absl::InvalidArgumentError(absl::StrCat("benchmark config: ", e.what()));
  }
  return config;
}

absl::StatusOr<BenchmarkReport> RunBenchmark(const BenchmarkConfig& config) {
  struct Task {
    const BenchmarkDataset* dataset;
    int index;
    std::string method;
    int k;
  };
  std::vector<Task> tasks;
  for (const BenchmarkDataset& dataset : config.datasets) {
    for (int i = 0; i < static_cast<int>(dataset.instances.size()); ++i) {
      for (int k : config.ks) {
        if (k < 1 || k > dataset.instances[i].num_sets) {
          return absl::FailedPreconditionError(absl::StrCat(
              "k=", k, " infeasible for ", dataset.name, " instance ", i));
        }
        for (const std::string& method : config.methods) {
          tasks.push_back({&dataset, i, method, k});
        }
      }
    }
  }

  std::vector<BenchmarkRow> rows(tasks.size());
  std::vector<absl::Status> errors(tasks.size());
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (size_t t = next++; t < tasks.size(); t = next++) {
      const Task& task = tasks[t];
      const CoverageInstance& instance = task.dataset->instances[task.index];
      CoverageObjective f(instance);
      absl::StatusOr<SolveResult> result =
          RunMethod(task.method, f, Cardinality{task.k}, instance.num_sets,
                    config.settings, config.seed, &instance);
      if (!result.ok()) {
        errors[t] = result.status();
        continue;
      }
      BenchmarkRow& row = rows[t];
      row.instance_id = absl::StrFormat("%s-%04d", task.dataset->name, task.index);
      row.method = task.method;
      row.k = task.k;
      row.objective = result->objective;
      row.extension = result->extension;
      row.time_ms = result->time_ms;
      row.seed = config.seed;
      row.iterations = result->iterations;
    }
  };
  const int threads =
      std::min<int>(config.threads, std::max<size_t>(1, tasks.size()));
  std::vector<std::thread> pool;
  for (int i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
  for (const absl::Status& s : errors) {
    if (!s.ok()) return s;
  }

  BenchmarkReport report;
  std::map<std::tuple<std::string, std::string, int>, std::vector<size_t>> groups;
  for (size_t t = 0; t < tasks.size(); ++t) {
    groups[{tasks[t].dataset->name, tasks[t].method, tasks[t].k}].push_back(t);
  }
  for (const auto& [key, members] : groups) {
    SummaryRow summary;
    std::tie(summary.dataset, summary.method, summary.k) = key;
    summary.runs = static_cast<int>(members.size());
    for (size_t t : members) {
      summary.mean += rows[t].objective;
      summary.mean_time_ms += rows[t].time_ms;
    }
    summary.mean /= summary.runs;
    summary.mean_time_ms /= summary.runs;
    if (summary.runs > 1) {
      double sq = 0.0;
      for (size_t t : members) {
        sq += (rows[t].objective - summary.mean) * (rows[t].objective - summary.mean);
      }
      summary.stddev = std::sqrt(sq / (summary.runs - 1));
    }
    report.summary.push_back(std::move(summary));
  }
  report.rows = std::move(rows);
  std::sort(report.rows.begin(), report.rows.end(),
            [](const BenchmarkRow& a, const BenchmarkRow& b) {
              return std::tie(a.instance_id, a.method, a.k) <
                     std::tie(b.instance_id, b.method, b.k);
            });
  return report;
}

std::string FormatSummary(std::span<const SummaryRow> summary) {
  std::string out;
  for (const SummaryRow& row : summary) {
    absl::StrAppendFormat(&out, "%s %s k=%d: %.2f ± %.2f (%d runs, %.1f ms)\n",
                          row.dataset, row.method, row.k, row.mean, row.stddev,
                          row.runs, row.mean_time_ms);
  }
  return out;
}

absl::Status WritePlotData(const BenchmarkReport& report, const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) return absl::PermissionDeniedError(absl::StrCat("cannot create ", dir));
  std::map<std::string, std::string> files;
  for (const BenchmarkRow& row : report.rows) {
    std::string& text = files[row.method];
    if (text.empty()) text = "instance_id,time_ms,objective\n";
    absl::StrAppend(&text, row.instance_id, ",", absl::StrFormat("%.3f", row.time_ms),
                    ",", FormatDouble(row.objective), "\n");
  }
  for (const auto& [method, text] : files) {
    std::string name = method;
    std::replace(name.begin(), name.end(), '+', '_');
    if (absl::Status s = WriteFile(
            (std::filesystem::path(dir) / (name + ".csv")).string(), text);
        !s.ok()) {
      return s;
    }
  }
  return absl::OkStatus();
}

}  // namespace polydec
