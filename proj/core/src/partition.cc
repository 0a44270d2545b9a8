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

#include "polydec/partition.h"

#include <algorithm>
#include <cmath>

#include "absl/strings/str_cat.h"
#include "polydec/hypersimplex.h"

namespace polydec {
namespace {

std::vector<double> Gather(std::span<const double> x,
                           const std::vector<int>& block) {
  std::vector<double> out;
  out.reserve(block.size());
  for (int i : block) out.push_back(x[i]);
  return out;
}

}  // namespace

absl::StatusOr<std::vector<double>> ProjectToPartitionPolytope(
    std::span<const double> z, const PartitionMatroid& spec) {
  const int n = static_cast<int>(z.size());
  if (absl::Status s = ValidateConstraint(spec, n); !s.ok()) return s;
  std::vector<double> x(n, 0.0);
  for (size_t b = 0; b < spec.blocks.size(); ++b) {
    const std::vector<int>& block = spec.blocks[b];
    if (block.empty()) continue;
    absl::StatusOr<std::vector<double>> local =
        ProjectToHypersimplex(Gather(z, block), spec.budgets[b]);
    if (!local.ok()) return local.status();
    for (size_t j = 0; j < block.size(); ++j) x[block[j]] = (*local)[j];
  }
  return x;
}

std::vector<double> ProjectToPartitionPolytopeVjp(
    std::span<const double> z, const PartitionMatroid& spec,
    std::span<const double> x_bar) {
  std::vector<double> z_bar(z.size(), 0.0);
  for (size_t b = 0; b < spec.blocks.size(); ++b) {
    const std::vector<int>& block = spec.blocks[b];
    if (block.empty()) continue;
    std::vector<double> local = ProjectToHypersimplexVjp(
        Gather(z, block), spec.budgets[b], Gather(x_bar, block));
    for (size_t j = 0; j < block.size(); ++j) z_bar[block[j]] = local[j];
  }
  return z_bar;
}

absl::StatusOr<VertexSet> PartitionVertex(std::span<const double> x,
                                          const PartitionMatroid& spec) {
  std::vector<int> chosen;
  for (size_t b = 0; b < spec.blocks.size(); ++b) {
    const std::vector<int>& block = spec.blocks[b];
    absl::StatusOr<VertexSet> local =
        TopKVertex(Gather(x, block), spec.budgets[b]);
    if (!local.ok()) return local.status();
    for (int j : local->indices()) chosen.push_back(block[j]);
  }
  return VertexSet::FromUnsorted(static_cast<int>(x.size()),
                                 std::move(chosen));
}

absl::Status CheckInPartitionPolytope(std::span<const double> x,
                                      const PartitionMatroid& spec) {
  const int n = static_cast<int>(x.size());
  if (absl::Status s = ValidateConstraint(spec, n); !s.ok()) return s;
  for (int i = 0; i < n; ++i) {
    if (!(x[i] >= -kFeasibilityTolerance &&
          x[i] <= 1.0 + kFeasibilityTolerance)) {
      return absl::OutOfRangeError(
          absl::StrCat("entry ", i, " = ", x[i], " outside [0, 1]"));
    }
  }
  for (size_t b = 0; b < spec.blocks.size(); ++b) {
    double sum = 0.0;
    for (int i : spec.blocks[b]) sum += x[i];
    if (std::abs(sum - spec.budgets[b]) > kSumTolerance) {
      return absl::InvalidArgumentError(absl::StrCat(
          "block ", b, " sums to ", sum, ", expected ", spec.budgets[b]));
    }
  }
  return absl::OkStatus();
}

absl::StatusOr<VertexSet> PartitionFamily::Vertex(
    std::span<const double> x) const {
  return PartitionVertex(x, spec_);
}

absl::StatusOr<StepCoefficient> PartitionFamily::MaxStep(
    std::span<const double> x, const VertexSet& vertex) const {
  return MaxStepCoefficient(x, vertex);
}

absl::StatusOr<TapedDecomposition> DecomposePartitionWithTape(
    std::span<const double> x, const PartitionMatroid& spec,
    const DecompositionConfig& config) {
  if (absl::Status s = CheckInPartitionPolytope(x, spec); !s.ok()) return s;
  return RunDecomposition(PartitionFamily(spec), x, config);
}

absl::StatusOr<Decomposition> DecomposePartition(
    std::span<const double> x, const PartitionMatroid& spec,
    const DecompositionConfig& config) {
  absl::StatusOr<TapedDecomposition> taped =
      DecomposePartitionWithTape(x, spec, config);
  if (!taped.ok()) return taped.status();
  return std::move(taped->decomposition);
}

}  // namespace polydec
