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

// The continuous extension F(x) = sum_t p_t f(v_t) induced by a
// decomposition of x, its gradient, and rounding to the best support set.

#ifndef POLYDEC_EXTENSION_H_
#define POLYDEC_EXTENSION_H_

#include <functional>
#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "polydec/constraint.h"
#include "polydec/decomposition.h"
#include "polydec/driver.h"
#include "polydec/vertex_set.h"

namespace polydec {

// A set function f. Implementations must be pure.
class SetObjective {
 public:
  virtual ~SetObjective() = default;

  virtual double ValueOfSet(std::span<const int> set) const = 0;
  // Half-integral vertices score zero unless overridden.
  virtual double ValueOfHalfIntegral(const VertexSet& vertex) const;

  double Evaluate(const VertexSet& vertex) const;
};

class FunctionObjective : public SetObjective {
 public:
  explicit FunctionObjective(std::function<double(std::span<const int>)> fn)
      : fn_(std::move(fn)) {}
  double ValueOfSet(std::span<const int> set) const override {
    return fn_(set);
  }

 private:
  std::function<double(std::span<const int>)> fn_;
};

// Dispatches to the family decomposition; checks membership of x first.
absl::StatusOr<TapedDecomposition> DecomposeWithTape(
    std::span<const double> x, const ConstraintSpec& spec,
    const DecompositionConfig& config = {});

absl::StatusOr<Decomposition> Decompose(std::span<const double> x,
                                        const ConstraintSpec& spec,
                                        const DecompositionConfig& config = {});

double EvaluateExtension(const Decomposition& decomposition,
                         const SetObjective& f);

struct RoundedSet {
  VertexSet vertex;
  double value = 0.0;
};

// The integral vertex with the largest f; ties go to the earliest pair.
absl::StatusOr<RoundedSet> BestSet(const Decomposition& decomposition,
                                   const SetObjective& f);

// Gradient of F with respect to the decomposed point, treating every chosen
// vertex and binding constraint as fixed.
std::vector<double> BackpropExtension(const GradientTape& tape,
                                      const SetObjective& f);

// Coordinates sharing a class id are tied by an equality constraint of the
// polytope's affine hull (sum fixed within the class); -1 marks a coordinate
// that can move alone.
std::vector<int> AffineHullClasses(const ConstraintSpec& spec, int dimension);

// Removes the per-class mean so gradients can be compared inside the
// affine hull.
std::vector<double> ProjectToTangent(std::span<const double> gradient,
                                     std::span<const int> classes);

struct FiniteDiffGradient {
  // Tangent-space gradient from central differences.
  std::vector<double> gradient;
  // False where a probe crossed into a different linear piece.
  std::vector<bool> reliable;
  bool all_reliable = true;
};

// Central differences of F along e_i (free coordinates) or e_i - e_r (r the
// first coordinate of i's class).
absl::StatusOr<FiniteDiffGradient> FiniteDiffExtensionGradient(
    std::span<const double> x, const ConstraintSpec& spec,
    const SetObjective& f, double h = 1e-6,
    const DecompositionConfig& config = {});

// The sequence of chosen vertices and binding pieces; two points with the
// same signature lie on the same linear piece of F.
struct PieceSignature {
  std::vector<VertexSet> vertices;
  std::vector<AffineFunctional> bindings;
  std::vector<double> multipliers;
  std::vector<bool> terminal;

  bool operator==(const PieceSignature& other) const;
};

PieceSignature SignatureOf(const GradientTape& tape);

}  // namespace polydec

#endif  // POLYDEC_EXTENSION_H_
