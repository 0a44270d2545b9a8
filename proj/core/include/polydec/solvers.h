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

// Optimization drivers built on the extension: direct gradient ascent,
// multi-scale rounding, local search, and the greedy and random baselines.

#ifndef POLYDEC_SOLVERS_H_
#define POLYDEC_SOLVERS_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "polydec/adam.h"
#include "polydec/constraint.h"
#include "polydec/decomposition.h"
#include "polydec/extension.h"
#include "polydec/objectives.h"
#include "polydec/rng.h"
#include "polydec/vertex_set.h"

namespace polydec {

struct SolveResult {
  VertexSet best;
  double objective = 0.0;
  // Extension value at the final iterate (0 for methods without one).
  double extension = 0.0;
  double time_ms = 0.0;
  int iterations = 0;
  std::string method;
  uint64_t seed = 0;
  // Final continuous point, when the method has one.
  std::vector<double> point;
};

struct OptimizeConfig {
  int steps = 150;
  AdamConfig adam;
  // Round the current decomposition every this many steps.
  int round_every = 1;
  uint64_t seed = 0;
  // Start from theta ~ U(-init_noise, init_noise) instead of theta = 0.
  bool perturb_init = false;
  double init_noise = 0.5;
  DecompositionConfig decomposition;
  // Central-difference step for the spanning-tree marginal Jacobian.
  double marginal_step = 1e-6;
};

// Maps z in (0,1)^n into the polytope of `spec` and back-propagates through
// that map: hypersimplex and block scaling for the matroid families built on
// cardinalities, spanning-tree marginals with weights z for the graphic
// family, and the violation correction for the stable set family.
class Parameterization {
 public:
  Parameterization(const ConstraintSpec& spec, int dimension,
                   double marginal_step = 1e-6);
  absl::StatusOr<std::vector<double>> Forward(std::span<const double> z) const;
  absl::StatusOr<std::vector<double>> Backward(
      std::span<const double> z, std::span<const double> x_bar) const;

 private:
  const ConstraintSpec& spec_;
  int dimension_;
  double marginal_step_;
};

// Adam ascent on F(project(logistic(theta))), keeping the best rounded set
// seen every `round_every` steps and at the end.
absl::StatusOr<SolveResult> DirectOptimize(const SetObjective& f,
                                           const ConstraintSpec& spec,
                                           int dimension,
                                           const OptimizeConfig& config = {});

struct ScaleSchedule {
  std::vector<double> scales = {1.0, 0.8, 0.6, 0.4, 0.2, 0.1, 0.05, 0.02, 0.01};
  int per_scale = 1;
  double floor = 1e-3;
  double tolerance = kDefaultResidualTolerance;
  int max_iterations = 20000;
  // Repetitions after the first decompose (1 - mixing) x + mixing v for a
  // random feasible vertex v.
  double mixing = 0.05;
};

struct MultiScaleResult {
  SolveResult result;
  // Every element appearing in some integral support set, sorted.
  std::vector<int> pool;
  int candidates = 0;
};

absl::StatusOr<MultiScaleResult> MultiScaleSolve(std::span<const double> x,
                                                 const ScaleSchedule& schedule,
                                                 const SetObjective& f,
                                                 const ConstraintSpec& spec,
                                                 uint64_t seed = 0);

// Best-improvement single swaps (i in S out, j in pool in) that keep the set
// feasible, until no swap strictly improves f or max_iter swaps were made.
absl::StatusOr<std::vector<int>> LocalImprove(std::span<const int> set,
                                              std::span<const int> pool,
                                              const SetObjective& f,
                                              const ConstraintSpec& spec,
                                              int dimension,
                                              int max_iter = 100);

// Lazy greedy on marginal gains; ties go to the smaller set index.
absl::StatusOr<SolveResult> GreedyCoverage(const CoverageInstance& instance,
                                           int k);

// A uniformly random feasible set: uniform k-subsets (per block for the
// partition family), Kruskal on uniform random weights for the graphic
// family, and a greedy maximal independent set in random order for the
// stable set family.
absl::StatusOr<std::vector<int>> SampleFeasibleSet(const ConstraintSpec& spec,
                                                   int dimension, Rng& rng);

struct RandomBudget {
  int64_t trials = 1;
  // When positive, stop once this much wall time has passed (checked every
  // 64 trials).
  double seconds = 0.0;
};

absl::StatusOr<SolveResult> RandomBaseline(const SetObjective& f,
                                           const ConstraintSpec& spec,
                                           int dimension,
                                           const RandomBudget& budget,
                                           uint64_t seed = 0);

// Decomposes one uniformly random point of the polytope and rounds it.
absl::StatusOr<SolveResult> RandomPointDecompBaseline(
    const SetObjective& f, const ConstraintSpec& spec, int dimension,
    uint64_t seed = 0);

}  // namespace polydec

#endif  // POLYDEC_SOLVERS_H_
