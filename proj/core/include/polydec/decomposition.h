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

#ifndef POLYDEC_DECOMPOSITION_H_
#define POLYDEC_DECOMPOSITION_H_

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "polydec/vertex_set.h"

namespace polydec {

inline constexpr double kFeasibilityTolerance = 1e-9;
inline constexpr double kDefaultNumericGuard = 1e-12;
inline constexpr double kDefaultResidualTolerance = 1e-4;

struct DecompositionPair {
  double probability = 0.0;
  VertexSet vertex;
};

struct Decomposition {
  std::vector<DecompositionPair> pairs;
  // Infinity-norm reconstruction error against the decomposed point.
  double residual = 0.0;
  int iterations = 0;

  double ProbabilitySum() const;
};

// Parameters of the iteration driver. `scale == 1 && floor == 0` is the exact
// decomposition; otherwise every maximal step a_t is shrunk to scale * a_t
// unless that falls below `floor`, in which case the full step is taken.
struct DecompositionConfig {
  double scale = 1.0;
  double floor = 0.0;
  // Stopping tolerance on the infinity-norm residual (rescaled mode only).
  double tolerance = kDefaultResidualTolerance;
  // 0 selects a default: 2n + 2 in exact mode, 20000 when rescaling.
  int max_iterations = 0;
  double numeric_guard = kDefaultNumericGuard;

  bool exact() const { return scale == 1.0 && floor == 0.0; }
};

absl::Status ValidateConfig(const DecompositionConfig& config);

// An affine function of the iterate: constant + sum_i coef_i * x(i).
struct AffineFunctional {
  double constant = 0.0;
  std::vector<std::pair<int, double>> terms;

  double Evaluate(std::span<const double> x) const;
  // Structural identity (same indices and coefficients up to 1e-12).
  bool SameAs(const AffineFunctional& other) const;
};

enum class BindingKind {
  kMinInSet,          // a = x(i), i in the chosen vertex
  kOneMinusMaxOutside,  // a = 1 - x(j), j outside the chosen vertex
  kRankFace,          // graphic: a = (r(F) - x(F)) / (r(F) - |S n F|)
  kPolytopeFacet,     // stable set: a = (b - z.x) / (b - z.v)
  kTerminal,          // the iterate is the vertex; a = 1
};

std::string BindingKindName(BindingKind kind);

// The maximal feasible step toward the chosen vertex, together with the
// linear piece that produced it. `index` names the coordinate or constraint;
// `face` lists edges of a binding rank face for the graphic family.
struct StepCoefficient {
  double value = 1.0;
  BindingKind kind = BindingKind::kTerminal;
  int index = -1;
  std::vector<int> face;
  AffineFunctional functional;
};

// One iteration of the driver as recorded for reverse-mode differentiation.
struct TapeStep {
  VertexSet vertex;
  StepCoefficient binding;
  // Multiplier applied to the maximal step (scale, or 1 when the floor rule
  // or exact mode keeps the full step).
  double step_multiplier = 1.0;
  // Coefficient actually used.
  double coefficient = 0.0;
  // True when the step was forced to 1 because 1 - a < guard.
  bool terminal = false;
  std::vector<double> iterate;
};

struct GradientTape {
  int dimension = 0;
  std::vector<TapeStep> steps;
};

// Recomputes probabilities p_t = a_t * prod_{i<t} (1 - a_i) from the tape.
std::vector<double> ReplayProbabilities(const GradientTape& tape);

// sum_t p_t v_t as a dense vector.
absl::StatusOr<std::vector<double>> Reconstruct(
    std::span<const DecompositionPair> pairs, int dimension);

double InfinityNormDistance(std::span<const double> a,
                            std::span<const double> b);

}  // namespace polydec

#endif  // POLYDEC_DECOMPOSITION_H_
