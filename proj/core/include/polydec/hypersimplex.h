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

// Exact-cardinality constraints: the (n, k)-hypersimplex
//   { x in [0,1]^n : sum_i x(i) = k }.

#ifndef POLYDEC_HYPERSIMPLEX_H_
#define POLYDEC_HYPERSIMPLEX_H_

#include <span>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "polydec/decomposition.h"
#include "polydec/driver.h"
#include "polydec/vertex_set.h"

namespace polydec {

inline constexpr double kSumTolerance = 1e-7;

// Maps z in [0,1]^n to s * (z - mean(z)) + k/n with the largest scale s that
// keeps every coordinate in [0, 1]. Constant z (including all-zero and
// all-one) maps to the center (k/n, ..., k/n).
absl::StatusOr<std::vector<double>> ProjectToHypersimplex(
    std::span<const double> z, int k);

// Vector-Jacobian product of ProjectToHypersimplex at z.
std::vector<double> ProjectToHypersimplexVjp(std::span<const double> z, int k,
                                             std::span<const double> x_bar);

// Indices of the k largest entries; ties go to the smaller index.
absl::StatusOr<VertexSet> TopKVertex(std::span<const double> x, int k);

// min( min_{i in S} x(i), 1 - max_{i not in S} x(i) ), with vacuous terms
// treated as +infinity and the result capped at 1. Ties prefer the
// in-set term, then the smallest index.
StepCoefficient MaxStepCoefficient(std::span<const double> x,
                                   const VertexSet& vertex);

absl::Status CheckInHypersimplex(std::span<const double> x, int k);

class CardinalityFamily : public PolytopeFamily {
 public:
  CardinalityFamily(int dimension, int k) : dimension_(dimension), k_(k) {}

  int dimension() const override { return dimension_; }
  absl::StatusOr<VertexSet> Vertex(std::span<const double> x) const override;
  absl::StatusOr<StepCoefficient> MaxStep(
      std::span<const double> x, const VertexSet& vertex) const override;

 private:
  int dimension_;
  int k_;
};

// Exact decomposition by default; a rescaling config gives the approximate
// variant with a larger support.
absl::StatusOr<Decomposition> DecomposeHypersimplex(
    std::span<const double> x, int k, const DecompositionConfig& config = {});

absl::StatusOr<TapedDecomposition> DecomposeHypersimplexWithTape(
    std::span<const double> x, int k, const DecompositionConfig& config = {});

}  // namespace polydec

#endif  // POLYDEC_HYPERSIMPLEX_H_
