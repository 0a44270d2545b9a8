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

#include "polydec/generators.h"

#include <algorithm>
#include <cmath>

#include "absl/strings/str_cat.h"
#include "polydec/rng.h"

namespace polydec {
namespace {

std::vector<double> DrawWeights(const CoverageGenParams& params, uint64_t seed,
                                uint64_t instance) {
  Rng rng(seed, instance, Purpose::kElementWeights);
  std::vector<double> weights(params.num_elements);
  for (double& w : weights) {
    w = static_cast<double>(rng.UniformInt(params.min_weight, params.max_weight));
  }
  return weights;
}

}  // namespace

absl::Status CoverageGenParams::Validate() const {
  if (num_sets < 1 || num_elements < 1) {
    return absl::InvalidArgumentError("sizes must be at least 1");
  }
  if (min_degree < 1 || min_degree > max_degree) {
    return absl::InvalidArgumentError(
        absl::StrCat("bad degree range [", min_degree, ", ", max_degree, "]"));
  }
  if (min_weight < 0 || min_weight > max_weight) {
    return absl::InvalidArgumentError(
        absl::StrCat("bad weight range [", min_weight, ", ", max_weight, "]"));
  }
  if (!(min_alpha > 0.0 && min_alpha <= max_alpha)) {
    return absl::InvalidArgumentError("bad Pareto shape range");
  }
  return absl::OkStatus();
}

absl::StatusOr<CoverageInstance> GenerateRandomUniform(
    const CoverageGenParams& params, uint64_t seed, uint64_t instance) {
  if (absl::Status s = params.Validate(); !s.ok()) return s;
  if (params.max_degree > params.num_elements) {
    return absl::FailedPreconditionError(
        absl::StrCat("degree range [", params.min_degree, ", ",
                     params.max_degree, "] exceeds ", params.num_elements,
                     " elements"));
  }
  Rng degrees(seed, instance, Purpose::kSetDegrees);
  Rng members(seed, instance, Purpose::kSetMembers);
  CoverageInstance out;
  out.num_sets = params.num_sets;
  out.num_elements = params.num_elements;
  out.sets.resize(params.num_sets);
  for (auto& set : out.sets) {
    const int degree =
        static_cast<int>(degrees.UniformInt(params.min_degree, params.max_degree));
    set = members.SampleWithoutReplacement(params.num_elements, degree);
  }
  out.weights = DrawWeights(params, seed, instance);
  return out;
}

absl::StatusOr<CoverageInstance> GenerateRandomPareto(
    const CoverageGenParams& params, uint64_t seed, uint64_t instance) {
  if (absl::Status s = params.Validate(); !s.ok()) return s;
  Rng shapes(seed, instance, Purpose::kParetoShape);
  Rng degrees(seed, instance, Purpose::kSetDegrees);
  Rng members(seed, instance, Purpose::kSetMembers);
  CoverageInstance out;
  out.num_sets = params.num_sets;
  out.num_elements = params.num_elements;
  out.sets.resize(params.num_sets);
  for (auto& set : out.sets) {
    const double alpha = shapes.Uniform(params.min_alpha, params.max_alpha);
    const double draw = std::floor(degrees.Pareto(alpha));
    const int degree = static_cast<int>(
        std::clamp(draw, 1.0, static_cast<double>(params.num_elements)));
    set = members.SampleWithoutReplacement(params.num_elements, degree);
  }
  std::vector<char> covered(params.num_elements, 0);
  for (const auto& set : out.sets) {
    for (int e : set) covered[e] = 1;
  }
  Rng fixup(seed, instance, Purpose::kCoverFixup);
  for (int e = 0; e < params.num_elements; ++e) {
    if (covered[e]) continue;
    auto& set = out.sets[fixup.UniformInt(0, params.num_sets - 1)];
    set.insert(std::lower_bound(set.begin(), set.end(), e), e);
  }
  out.weights = DrawWeights(params, seed, instance);
  return out;
}

absl::StatusOr<Graph> GenerateErdosRenyi(int num_nodes, double p, uint64_t seed,
                                         uint64_t instance) {
  if (num_nodes < 1) return absl::InvalidArgumentError("need at least 1 node");
  if (!(p > 0.0 && p < 1.0)) {
    return absl::InvalidArgumentError(absl::StrCat("p=", p, " outside (0, 1)"));
  }
  Rng rng(seed, instance, Purpose::kGraphEdges);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < num_nodes; ++u) {
    for (int v = u + 1; v < num_nodes; ++v) {
      if (rng.Bernoulli(p)) edges.emplace_back(u, v);
    }
  }
  return MakeGraph(num_nodes, std::move(edges));
}

}  // namespace polydec
