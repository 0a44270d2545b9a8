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

// Max-coverage benchmark orchestration.
//
// A config is a JSON object:
//   {
//     "seed": 0, "threads": 1,
//     "datasets": [
//       {"name": "random500", "generator": "uniform", "num_sets": 500,
//        "num_elements": 1000, "count": 20},
//       {"name": "mine", "files": ["a.json", "b.json"]}
//     ],
//     "methods": ["greedy", "random", "direct", "direct+local"],
//     "k": [10],
//     "random": {"trials": 10000, "seconds": 0},
//     "optimize": {"steps": 150, "lr": 0.015, "round_every": 1},
//     "schedule": {"scales": [1.0, 0.5], "per_scale": 1, "floor": 0.001,
//                  "tolerance": 0.0001},
//     "local": {"max_iter": 100},
//     "plot_dir": ""
//   }
// Generators are "uniform" and "pareto"; unspecified generator fields take
// the CoverageGenParams defaults.

#ifndef POLYDEC_BENCHMARK_RUNNER_H_
#define POLYDEC_BENCHMARK_RUNNER_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "polydec/constraint.h"
#include "polydec/extension.h"
#include "polydec/io.h"
#include "polydec/objectives.h"
#include "polydec/solvers.h"

namespace polydec {

struct MethodSettings {
  OptimizeConfig optimize;
  ScaleSchedule schedule;
  RandomBudget random{10000, 0.0};
  int local_max_iter = 100;
};

// Methods: "greedy" (coverage only), "random", "random+decomp", "direct",
// "direct+multiscale" (direct, then multi-scale rounding of its final point)
// and "direct+local" (additionally local search over the support pool).
absl::StatusOr<SolveResult> RunMethod(std::string_view method,
                                      const SetObjective& f,
                                      const ConstraintSpec& spec, int dimension,
                                      const MethodSettings& settings,
                                      uint64_t seed,
                                      const CoverageInstance* coverage = nullptr);

struct BenchmarkDataset {
  std::string name;
  std::vector<CoverageInstance> instances;
};

struct BenchmarkConfig {
  uint64_t seed = 0;
  int threads = 1;
  std::vector<BenchmarkDataset> datasets;
  std::vector<std::string> methods;
  std::vector<int> ks;
  MethodSettings settings;
  std::string plot_dir;
};

// Parses the config and loads or generates every dataset. Relative instance
// paths are resolved against `base_dir`.
absl::StatusOr<BenchmarkConfig> ParseBenchmarkConfig(std::string_view text,
                                                     const std::string& base_dir = ".");

struct SummaryRow {
  std::string dataset;
  std::string method;
  int k = 0;
  int runs = 0;
  double mean = 0.0;
  double stddev = 0.0;  // sample standard deviation
  double mean_time_ms = 0.0;
};

struct BenchmarkReport {
  // Sorted by (instance_id, method, k).
  std::vector<BenchmarkRow> rows;
  std::vector<SummaryRow> summary;
};

absl::StatusOr<BenchmarkReport> RunBenchmark(const BenchmarkConfig& config);

// "dataset method k: mean ± std (n runs, mean time ms)" lines.
std::string FormatSummary(std::span<const SummaryRow> summary);

// Writes <dir>/<method>.csv with instance_id,time_ms,objective per row.
absl::Status WritePlotData(const BenchmarkReport& report, const std::string& dir);

}  // namespace polydec

#endif  // POLYDEC_BENCHMARK_RUNNER_H_
