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

// The generic vertex-peeling iteration shared by every constraint family.
//
// Starting from x_0 = x, each iteration asks the family for a vertex v_t in
// the minimal face of the current iterate and for the largest a_t such that
//
//   x_{t+1} = (x_t - a_t v_t) / (1 - a_t)
//
// stays in the polytope. The pair (a_t * prod_{i<t} (1 - a_i), v_t) is
// emitted and the loop continues until the iterate is itself a vertex (exact
// mode) or the remaining mass times the iterate drops below the tolerance
// (rescaled mode).

#ifndef POLYDEC_DRIVER_H_
#define POLYDEC_DRIVER_H_

#include <span>

#include "absl/status/statusor.h"
#include "polydec/decomposition.h"
#include "polydec/vertex_set.h"

namespace polydec {

class PolytopeFamily {
 public:
  virtual ~PolytopeFamily() = default;

  virtual int dimension() const = 0;

  // A vertex of the minimal face containing `x`, chosen deterministically.
  virtual absl::StatusOr<VertexSet> Vertex(std::span<const double> x) const = 0;

  // The largest step toward `vertex` that keeps the next iterate feasible,
  // with the affine piece that attains it.
  virtual absl::StatusOr<StepCoefficient> MaxStep(
      std::span<const double> x, const VertexSet& vertex) const = 0;
};

struct TapedDecomposition {
  Decomposition decomposition;
  GradientTape tape;
};

// Coordinates within kSnapTolerance / mass of 0 or 1 are snapped after each
// update, where mass is the probability not yet assigned. The window never
// exceeds kMaxSnapWindow.
inline constexpr double kSnapTolerance = 1e-11;
inline constexpr double kMaxSnapWindow = 1e-7;

// Box bindings closer than this are treated as tied and resolved toward the
// smallest in-set coordinate, so rounding noise cannot flip the recorded piece.
inline constexpr double kBindingTieWindow = 1e-12;

absl::StatusOr<TapedDecomposition> RunDecomposition(
    const PolytopeFamily& family, std::span<const double> x,
    const DecompositionConfig& config);

// The rescaling rule: b * a when that is at least the floor, else a.
double RescaledCoefficient(double max_step, const DecompositionConfig& config,
                           double* multiplier);

}  // namespace polydec

#endif  // POLYDEC_DRIVER_H_
