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

#include "polydec/decomposition.h"

#include <algorithm>
#include <cmath>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace polydec {

double Decomposition::ProbabilitySum() const {
  double sum = 0.0;
  for (const DecompositionPair& pair : pairs) sum += pair.probability;
  return sum;
}

absl::Status ValidateConfig(const DecompositionConfig& config) {
  if (!(config.scale > 0.0 && config.scale <= 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("scale must be in (0, 1], got ", config.scale));
  }
  if (!(config.floor >= 0.0 && config.floor < 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("floor must be in [0, 1), got ", config.floor));
  }
  if (!(config.tolerance > 0.0)) {
    return absl::InvalidArgumentError("tolerance must be positive");
  }
  if (config.max_iterations < 0) {
    return absl::InvalidArgumentError("max_iterations must be >= 0");
  }
  if (!(config.numeric_guard > 0.0)) {
    return absl::InvalidArgumentError("numeric_guard must be positive");
  }
  return absl::OkStatus();
}

double AffineFunctional::Evaluate(std::span<const double> x) const {
  double value = constant;
  for (const auto& [i, c] : terms) value += c * x[i];
  return value;
}

bool AffineFunctional::SameAs(const AffineFunctional& other) const {
  if (terms.size() != other.terms.size()) return false;
  if (std::abs(constant - other.constant) > 1e-12) return false;
  for (size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].first != other.terms[i].first) return false;
    if (std::abs(terms[i].second - other.terms[i].second) > 1e-12) return false;
  }
  return true;
}

std::string BindingKindName(BindingKind kind) {
  switch (kind) {
    case BindingKind::kMinInSet:
      return "min_in_set";
    case BindingKind::kOneMinusMaxOutside:
      return "one_minus_max_outside";
    case BindingKind::kRankFace:
      return "rank_face";
    case BindingKind::kPolytopeFacet:
      return "polytope_facet";
    case BindingKind::kTerminal:
      return "terminal";
  }
  return "unknown";
}

std::vector<double> ReplayProbabilities(const GradientTape& tape) {
  std::vector<double> probabilities;
  probabilities.reserve(tape.steps.size());
  double mass = 1.0;
  for (const TapeStep& step : tape.steps) {
    probabilities.push_back(step.coefficient * mass);
    mass *= 1.0 - step.coefficient;
  }
  return probabilities;
}

absl::StatusOr<std::vector<double>> Reconstruct(
    std::span<const DecompositionPair> pairs, int dimension) {
  std::vector<double> out(dimension, 0.0);
  for (const DecompositionPair& pair : pairs) {
    if (pair.vertex.dimension() != dimension) {
      return absl::InvalidArgumentError(
          absl::StrCat("vertex dimension ", pair.vertex.dimension(),
                       " does not match ", dimension));
    }
    pair.vertex.AddScaledTo(pair.probability, out);
  }
  return out;
}

double InfinityNormDistance(std::span<const double> a,
                            std::span<const double> b) {
  double worst = 0.0;
  const size_t n = std::min(a.size(), b.size());
  for (size_t i = 0; i < n; ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

}  // namespace polydec
