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

#include "polydec/hypersimplex.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "absl/strings/str_cat.h"

namespace polydec {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

absl::Status CheckUnitBox(std::span<const double> z) {
  for (size_t i = 0; i < z.size(); ++i) {
    if (!(z[i] >= 0.0 && z[i] <= 1.0)) {
      return absl::OutOfRangeError(
          absl::StrCat("entry ", i, " = ", z[i], " outside [0, 1]"));
    }
  }
  return absl::OkStatus();
}

}  // namespace

absl::StatusOr<std::vector<double>> ProjectToHypersimplex(
    std::span<const double> z, int k) {
  const int n = static_cast<int>(z.size());
  if (n == 0) return absl::InvalidArgumentError("empty vector");
  if (k < 0 || k > n) {
    return absl::InvalidArgumentError(
        absl::StrCat("k=", k, " outside [0, ", n, "]"));
  }
  if (absl::Status s = CheckUnitBox(z); !s.ok()) return s;
  const double center = static_cast<double>(k) / n;
  std::vector<double> x(n, center);
  const auto [lo, hi] = std::minmax_element(z.begin(), z.end());
  if (*lo == *hi || k == 0 || k == n) return x;
  const double mean = std::accumulate(z.begin(), z.end(), 0.0) / n;
  if (mean <= 0.0 || mean >= 1.0) return x;
  const double scale =
      std::min(center / mean, (1.0 - center) / (1.0 - mean));
  for (int i = 0; i < n; ++i) {
    x[i] = std::clamp(scale * (z[i] - mean) + center, 0.0, 1.0);
  }
  return x;
}

std::vector<double> ProjectToHypersimplexVjp(std::span<const double> z, int k,
                                             std::span<const double> x_bar) {
  const int n = static_cast<int>(z.size());
  std::vector<double> z_bar(n, 0.0);
  if (n == 0 || k <= 0 || k >= n) return z_bar;
  const double center = static_cast<double>(k) / n;
  const double mean = std::accumulate(z.begin(), z.end(), 0.0) / n;
  if (mean <= 0.0 || mean >= 1.0) return z_bar;
  const double low_branch = center / mean;
  const double high_branch = (1.0 - center) / (1.0 - mean);
  double scale, dscale_dmean;
  if (low_branch <= high_branch) {
    scale = low_branch;
    dscale_dmean = -center / (mean * mean);
  } else {
    scale = high_branch;
    dscale_dmean = (1.0 - center) / ((1.0 - mean) * (1.0 - mean));
  }
  const double bar_mean =
      std::accumulate(x_bar.begin(), x_bar.end(), 0.0) / n;
  double spread = 0.0;
  for (int i = 0; i < n; ++i) spread += x_bar[i] * (z[i] - mean);
  for (int j = 0; j < n; ++j) {
    z_bar[j] = scale * (x_bar[j] - bar_mean) + dscale_dmean * spread / n;
  }
  return z_bar;
}

absl::StatusOr<VertexSet> TopKVertex(std::span<const double> x, int k) {
  const int n = static_cast<int>(x.size());
  if (k < 0 || k > n) {
    return absl::InvalidArgumentError(
        absl::StrCat("k=", k, " outside [0, ", n, "]"));
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  auto before = [&x](int a, int b) {
    return x[a] > x[b] || (x[a] == x[b] && a < b);
  };
  std::nth_element(order.begin(), order.begin() + k, order.end(), before);
  order.resize(k);
  std::sort(order.begin(), order.end());
  return VertexSet::Integral(n, std::move(order));
}

StepCoefficient MaxStepCoefficient(std::span<const double> x,
                                   const VertexSet& vertex) {
  double min_in = kInf, max_out = -kInf;
  int arg_in = -1, arg_out = -1;
  for (int i = 0; i < static_cast<int>(x.size()); ++i) {
    if (vertex.Contains(i)) {
      if (x[i] < min_in) {
        min_in = x[i];
        arg_in = i;
      }
    } else if (x[i] > max_out) {
      max_out = x[i];
      arg_out = i;
    }
  }
  StepCoefficient step;
  const double out_term = arg_out >= 0 ? 1.0 - max_out : kInf;
  if (arg_in >= 0 && min_in <= out_term + kBindingTieWindow && min_in < 1.0) {
    step.value = min_in;
    step.kind = BindingKind::kMinInSet;
    step.index = arg_in;
    step.functional.terms = {{arg_in, 1.0}};
  } else if (arg_out >= 0 && out_term < 1.0) {
    step.value = out_term;
    step.kind = BindingKind::kOneMinusMaxOutside;
    step.index = arg_out;
    step.functional.constant = 1.0;
    step.functional.terms = {{arg_out, -1.0}};
  } else {
    step.value = 1.0;
    step.kind = BindingKind::kTerminal;
    step.functional.constant = 1.0;
  }
  return step;
}

absl::Status CheckInHypersimplex(std::span<const double> x, int k) {
  double sum = 0.0;
  for (size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] >= -kFeasibilityTolerance &&
          x[i] <= 1.0 + kFeasibilityTolerance)) {
      return absl::OutOfRangeError(
          absl::StrCat("entry ", i, " = ", x[i], " outside [0, 1]"));
    }
    sum += x[i];
  }
  if (std::abs(sum - k) > kSumTolerance) {
    return absl::InvalidArgumentError(
        absl::StrCat("entries sum to ", sum, ", expected k=", k));
  }
  return absl::OkStatus();
}

absl::StatusOr<VertexSet> CardinalityFamily::Vertex(
    std::span<const double> x) const {
  return TopKVertex(x, k_);
}

absl::StatusOr<StepCoefficient> CardinalityFamily::MaxStep(
    std::span<const double> x, const VertexSet& vertex) const {
  return MaxStepCoefficient(x, vertex);
}

absl::StatusOr<TapedDecomposition> DecomposeHypersimplexWithTape(
    std::span<const double> x, int k, const DecompositionConfig& config) {
  const int n = static_cast<int>(x.size());
  if (k < 0 || k > n) {
    return absl::InvalidArgumentError(
        absl::StrCat("k=", k, " outside [0, ", n, "]"));
  }
  if (absl::Status s = CheckInHypersimplex(x, k); !s.ok()) return s;
  return RunDecomposition(CardinalityFamily(n, k), x, config);
}

absl::StatusOr<Decomposition> DecomposeHypersimplex(
    std::span<const double> x, int k, const DecompositionConfig& config) {
  absl::StatusOr<TapedDecomposition> taped =
      DecomposeHypersimplexWithTape(x, k, config);
  if (!taped.ok()) return taped.status();
  return std::move(taped->decomposition);
}

}  // namespace polydec
