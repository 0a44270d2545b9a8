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

// Synthetic instances. Every generator is a pure function of its parameters,
// the seed and the instance index.

#ifndef POLYDEC_GENERATORS_H_
#define POLYDEC_GENERATORS_H_

#include <cstdint>

#include "absl/status/statusor.h"
#include "polydec/graph.h"
#include "polydec/objectives.h"

namespace polydec {

struct CoverageGenParams {
  int num_sets = 500;
  int num_elements = 1000;
  int min_degree = 10;
  int max_degree = 30;
  int min_weight = 1;    // inclusive integer weights
  int max_weight = 100;
  double min_alpha = 1.0;  // Pareto shape range
  double max_alpha = 2.0;

  absl::Status Validate() const;
};

// Set degrees uniform in [min_degree, max_degree]; members sampled without
// replacement; element weights uniform integers in [min_weight, max_weight].
absl::StatusOr<CoverageInstance> GenerateRandomUniform(
    const CoverageGenParams& params, uint64_t seed, uint64_t instance = 0);

// Set degrees floor(Pareto(alpha)) clipped to [1, num_elements], alpha uniform
// per set; afterwards every uncovered element joins a uniformly chosen set.
absl::StatusOr<CoverageInstance> GenerateRandomPareto(
    const CoverageGenParams& params, uint64_t seed, uint64_t instance = 0);

// G(n, p): pairs (u, v), u < v, visited in lexicographic order, each kept
// with probability p.
absl::StatusOr<Graph> GenerateErdosRenyi(int num_nodes, double p, uint64_t seed,
                                         uint64_t instance = 0);

}  // namespace polydec

#endif  // POLYDEC_GENERATORS_H_
