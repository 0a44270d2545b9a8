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

#include "polydec/extension.h"

#include <map>

#include "absl/strings/str_cat.h"
#include "polydec/fstab.h"
#include "polydec/graphic.h"
#include "polydec/hypersimplex.h"
#include "polydec/partition.h"

namespace polydec {

double SetObjective::ValueOfHalfIntegral(const VertexSet&) const { return 0.0; }

double SetObjective::Evaluate(const VertexSet& vertex) const {
  return vertex.is_integral() ? ValueOfSet(vertex.indices())
                              : ValueOfHalfIntegral(vertex);
}

absl::StatusOr<TapedDecomposition> DecomposeWithTape(
    std::span<const double> x, const ConstraintSpec& spec,
    const DecompositionConfig& config) {
  const int n = static_cast<int>(x.size());
  if (absl::Status s = ValidateConstraint(spec, n); !s.ok()) return s;
  if (const auto* c = std::get_if<Cardinality>(&spec)) {
    return DecomposeHypersimplexWithTape(x, c->k, config);
  }
  if (const auto* p = std::get_if<PartitionMatroid>(&spec)) {
    return DecomposePartitionWithTape(x, *p, config);
  }
  if (const auto* g = std::get_if<GraphicMatroid>(&spec)) {
    return DecomposeGraphicWithTape(x, g->graph, config);
  }
  return DecomposeFstabWithTape(
      x, std::get<FractionalStableSet>(spec).graph, config);
}

absl::StatusOr<Decomposition> Decompose(std::span<const double> x,
                                        const ConstraintSpec& spec,
                                        const DecompositionConfig& config) {
  absl::StatusOr<TapedDecomposition> taped = DecomposeWithTape(x, spec, config);
  if (!taped.ok()) return taped.status();
  return std::move(taped->decomposition);
}

double EvaluateExtension(const Decomposition& decomposition,
                         const SetObjective& f) {
  double value = 0.0;
  for (const DecompositionPair& pair : decomposition.pairs) {
    value += pair.probability * f.Evaluate(pair.vertex);
  }
  return value;
}

absl::StatusOr<RoundedSet> BestSet(const Decomposition& decomposition,
                                   const SetObjective& f) {
  const DecompositionPair* best = nullptr;
  double best_value = 0.0;
  for (const DecompositionPair& pair : decomposition.pairs) {
    if (!pair.vertex.is_integral()) continue;
    const double value = f.ValueOfSet(pair.vertex.indices());
    if (best == nullptr || value > best_value) {
      best = &pair;
      best_value = value;
    }
  }
  if (best == nullptr) {
    return absl::NotFoundError("decomposition has no integral vertex");
  }
  return RoundedSet{best->vertex, best_value};
}

std::vector<double> BackpropExtension(const GradientTape& tape,
                                      const SetObjective& f) {
  const int n = tape.dimension;
  // H_t = a_t f_t + (1 - a_t) H_{t+1} is the value of the tail from step t
  // per unit of remaining mass; grad holds dH_{t+1}/dx_{t+1}.
  std::vector<double> grad(n, 0.0);
  double tail = 0.0;
  for (int t = static_cast<int>(tape.steps.size()) - 1; t >= 0; --t) {
    const TapeStep& step = tape.steps[t];
    const double f_t = f.Evaluate(step.vertex);
    if (step.terminal || step.coefficient >= 1.0) {
      std::fill(grad.begin(), grad.end(), 0.0);
      tail = f_t;
      continue;
    }
    const double a = step.coefficient;
    // d(tail)/d(a_t) through the value and through x_{t+1}.
    double slope = f_t - tail;
    for (int i = 0; i < n; ++i) {
      slope += grad[i] * (step.iterate[i] - step.vertex.value(i)) / (1.0 - a);
    }
    const double scale = slope * step.step_multiplier;
    for (const auto& [i, c] : step.binding.functional.terms) {
      grad[i] += scale * c;
    }
    tail = a * f_t + (1.0 - a) * tail;
  }
  return grad;
}

std::vector<int> AffineHullClasses(const ConstraintSpec& spec, int dimension) {
  if (std::holds_alternative<Cardinality>(spec)) {
    return std::vector<int>(dimension, 0);
  }
  if (const auto* p = std::get_if<PartitionMatroid>(&spec)) return p->BlockOf();
  if (const auto* g = std::get_if<GraphicMatroid>(&spec)) {
    return MatroidComponents(g->graph);
  }
  return std::vector<int>(dimension, -1);
}

std::vector<double> ProjectToTangent(std::span<const double> gradient,
                                     std::span<const int> classes) {
  std::map<int, std::pair<double, int>> sums;
  for (size_t i = 0; i < gradient.size(); ++i) {
    if (classes[i] < 0) continue;
    auto& [sum, count] = sums[classes[i]];
    sum += gradient[i];
    ++count;
  }
  std::vector<double> out(gradient.begin(), gradient.end());
  for (size_t i = 0; i < out.size(); ++i) {
    if (classes[i] < 0) continue;
    const auto& [sum, count] = sums[classes[i]];
    out[i] -= sum / count;
  }
  return out;
}

bool PieceSignature::operator==(const PieceSignature& other) const {
  if (vertices != other.vertices || terminal != other.terminal ||
      multipliers != other.multipliers ||
      bindings.size() != other.bindings.size()) {
    return false;
  }
  for (size_t t = 0; t < bindings.size(); ++t) {
    if (!bindings[t].SameAs(other.bindings[t])) return false;
  }
  return true;
}

PieceSignature SignatureOf(const GradientTape& tape) {
  PieceSignature signature;
  for (const TapeStep& step : tape.steps) {
    signature.vertices.push_back(step.vertex);
    signature.bindings.push_back(step.binding.functional);
    signature.multipliers.push_back(step.step_multiplier);
    signature.terminal.push_back(step.terminal);
  }
  return signature;
}

absl::StatusOr<FiniteDiffGradient> FiniteDiffExtensionGradient(
    std::span<const double> x, const ConstraintSpec& spec,
    const SetObjective& f, double h, const DecompositionConfig& config) {
  const int n = static_cast<int>(x.size());
  absl::StatusOr<TapedDecomposition> center = DecomposeWithTape(x, spec, config);
  if (!center.ok()) return center.status();
  const PieceSignature center_piece = SignatureOf(center->tape);
  const std::vector<int> classes = AffineHullClasses(spec, n);

  // First coordinate of each class serves as the compensating coordinate.
  std::map<int, int> anchor;
  for (int i = 0; i < n; ++i) {
    if (classes[i] >= 0) anchor.emplace(classes[i], i);
  }

  FiniteDiffGradient result;
  std::vector<double> directional(n, 0.0);
  result.reliable.assign(n, true);
  std::vector<double> probe(x.begin(), x.end());
  for (int i = 0; i < n; ++i) {
    const int partner = classes[i] >= 0 ? anchor[classes[i]] : -1;
    if (partner == i) continue;
    double values[2];
    for (int side = 0; side < 2; ++side) {
      const double step = side == 0 ? h : -h;
      std::copy(x.begin(), x.end(), probe.begin());
      probe[i] += step;
      if (partner >= 0) probe[partner] -= step;
      absl::StatusOr<TapedDecomposition> taped =
          DecomposeWithTape(probe, spec, config);
      if (taped.status().code() == absl::StatusCode::kOutOfRange) {
        // x sits on the boundary and this side leaves the polytope.
        result.reliable[i] = false;
        result.all_reliable = false;
        values[0] = values[1] = 0.0;
        break;
      }
      if (!taped.ok()) {
        return absl::Status(taped.status().code(),
                            absl::StrCat("probe along coordinate ", i, ": ",
                                         taped.status().message()));
      }
      values[side] = EvaluateExtension(taped->decomposition, f);
      if (!(SignatureOf(taped->tape) == center_piece)) {
        result.reliable[i] = false;
        result.all_reliable = false;
      }
    }
    directional[i] = (values[0] - values[1]) / (2.0 * h);
  }

  // Within a class, g_i - g_anchor = directional[i] and the projected
  // gradient sums to zero.
  result.gradient = ProjectToTangent(directional, classes);
  return result;
}

}  // namespace polydec
