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

#include "polydec/driver.h"

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace polydec {
namespace {

// Rounding error in the iterate grows like 1 / mass, so the snap window does
// too; a snap then moves the reconstruction by at most kSnapTolerance.
void Snap(std::vector<double>& x, double mass) {
  const double tol = std::min(kSnapTolerance / mass, kMaxSnapWindow);
  for (double& v : x) {
    if (v < tol) {
      v = 0.0;
    } else if (v > 1.0 - tol) {
      v = 1.0;
    }
  }
}

}  // namespace

double RescaledCoefficient(double max_step, const DecompositionConfig& config,
                           double* multiplier) {
  double m = 1.0;
  if (!config.exact() && config.scale * max_step >= config.floor) {
    m = config.scale;
  }
  if (multiplier != nullptr) *multiplier = m;
  return m * max_step;
}

absl::StatusOr<TapedDecomposition> RunDecomposition(
    const PolytopeFamily& family, std::span<const double> x,
    const DecompositionConfig& config) {
  if (absl::Status s = ValidateConfig(config); !s.ok()) return s;
  const int n = family.dimension();
  if (static_cast<int>(x.size()) != n) {
    return absl::InvalidArgumentError(
        absl::StrCat("point has dimension ", x.size(), ", expected ", n));
  }
  const bool exact = config.exact();
  const int max_iterations = config.max_iterations > 0 ? config.max_iterations
                             : exact                   ? 2 * n + 2
                                                       : 20000;

  TapedDecomposition out;
  out.tape.dimension = n;
  std::vector<double> iterate(x.begin(), x.end());
  double mass = 1.0;
  Snap(iterate, mass);

  for (int t = 0; t < max_iterations; ++t) {
    absl::StatusOr<VertexSet> vertex = family.Vertex(iterate);
    if (!vertex.ok()) return vertex.status();
    absl::StatusOr<StepCoefficient> step = family.MaxStep(iterate, *vertex);
    if (!step.ok()) return step.status();
    const double max_step = std::clamp(step->value, 0.0, 1.0);

    TapeStep record;
    record.coefficient = RescaledCoefficient(max_step, config,
                                             &record.step_multiplier);
    if (1.0 - record.coefficient < config.numeric_guard) {
      record.coefficient = 1.0;
      record.terminal = true;
    }
    const double a = record.coefficient;
    // A zero step cannot make progress; the residual reports the shortfall.
    if (a <= 0.0) break;
    out.decomposition.pairs.push_back({a * mass, *vertex});
    record.vertex = *std::move(vertex);
    record.binding = *std::move(step);
    record.iterate = iterate;
    out.tape.steps.push_back(std::move(record));

    if (a >= 1.0) {
      mass = 0.0;
      break;
    }
    const TapeStep& last = out.tape.steps.back();
    const double inv = 1.0 / (1.0 - a);
    for (int i = 0; i < n; ++i) {
      iterate[i] = (iterate[i] - a * last.vertex.value(i)) * inv;
    }
    mass *= 1.0 - a;
    Snap(iterate, mass);
    if (!exact) {
      double largest = 0.0;
      for (double v : iterate) largest = std::max(largest, std::abs(v));
      if (mass * largest <= config.tolerance) break;
    }
  }

  Decomposition& d = out.decomposition;
  d.iterations = static_cast<int>(d.pairs.size());
  absl::StatusOr<std::vector<double>> rebuilt = Reconstruct(d.pairs, n);
  if (!rebuilt.ok()) return rebuilt.status();
  d.residual = InfinityNormDistance(*rebuilt, x);
  return out;
}

}  // namespace polydec
