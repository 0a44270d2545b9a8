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

#include "polydec/constraint.h"

#include <cmath>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"

namespace polydec {

std::string FamilyName(Family family) {
  switch (family) {
    case Family::kCardinality:
      return "card";
    case Family::kPartition:
      return "partition";
    case Family::kGraphic:
      return "forest";
    case Family::kStableSet:
      return "indset";
  }
  return "unknown";
}

int PartitionMatroid::dimension() const {
  int n = 0;
  for (const auto& block : blocks) n += static_cast<int>(block.size());
  return n;
}

std::vector<int> PartitionMatroid::BlockOf() const {
  std::vector<int> block_of(dimension(), -1);
  for (int b = 0; b < static_cast<int>(blocks.size()); ++b) {
    for (int i : blocks[b]) {
      if (i >= 0 && i < static_cast<int>(block_of.size())) block_of[i] = b;
    }
  }
  return block_of;
}

Family FamilyOf(const ConstraintSpec& spec) {
  switch (spec.index()) {
    case 0:
      return Family::kCardinality;
    case 1:
      return Family::kPartition;
    case 2:
      return Family::kGraphic;
    default:
      return Family::kStableSet;
  }
}

int ConstraintDimension(const ConstraintSpec& spec) {
  if (const auto* p = std::get_if<PartitionMatroid>(&spec)) return p->dimension();
  if (const auto* g = std::get_if<GraphicMatroid>(&spec)) {
    return g->graph.num_edges();
  }
  if (const auto* s = std::get_if<FractionalStableSet>(&spec)) {
    return s->graph.num_nodes;
  }
  return -1;
}

absl::Status ValidateConstraint(const ConstraintSpec& spec, int dimension) {
  if (const auto* c = std::get_if<Cardinality>(&spec)) {
    if (c->k < 0 || c->k > dimension) {
      return absl::FailedPreconditionError(
          absl::StrCat("cardinality k=", c->k, " outside [0, ", dimension, "]"));
    }
    return absl::OkStatus();
  }
  if (const auto* p = std::get_if<PartitionMatroid>(&spec)) {
    if (p->blocks.size() != p->budgets.size()) {
      return absl::InvalidArgumentError("one budget per block required");
    }
    std::vector<int> seen(dimension, 0);
    for (size_t b = 0; b < p->blocks.size(); ++b) {
      const int size = static_cast<int>(p->blocks[b].size());
      if (p->budgets[b] < 0 || p->budgets[b] > size) {
        return absl::FailedPreconditionError(absl::StrCat(
            "block ", b, " budget ", p->budgets[b], " outside [0, ", size, "]"));
      }
      for (int i : p->blocks[b]) {
        if (i < 0 || i >= dimension) {
          return absl::OutOfRangeError(
              absl::StrCat("block element ", i, " outside [0, ", dimension, ")"));
        }
        if (seen[i]++) {
          return absl::InvalidArgumentError(
              absl::StrCat("element ", i, " appears in two blocks"));
        }
      }
    }
    for (int i = 0; i < dimension; ++i) {
      if (!seen[i]) {
        return absl::InvalidArgumentError(
            absl::StrCat("element ", i, " is not covered by any block"));
      }
    }
    return absl::OkStatus();
  }
  const int expected = ConstraintDimension(spec);
  if (expected != dimension) {
    return absl::InvalidArgumentError(absl::StrCat(
        "point has dimension ", dimension, " but the graph implies ", expected));
  }
  if (const auto* s = std::get_if<FractionalStableSet>(&spec)) {
    if (!(s->slack >= 0.0)) {
      return absl::InvalidArgumentError("stable set slack must be >= 0");
    }
  }
  return absl::OkStatus();
}

bool IsFeasibleVertex(const ConstraintSpec& spec, const VertexSet& vertex) {
  if (const auto* c = std::get_if<Cardinality>(&spec)) {
    return vertex.is_integral() && vertex.size() == c->k;
  }
  if (const auto* p = std::get_if<PartitionMatroid>(&spec)) {
    if (!vertex.is_integral() || vertex.dimension() != p->dimension()) {
      return false;
    }
    for (size_t b = 0; b < p->blocks.size(); ++b) {
      int count = 0;
      for (int i : p->blocks[b]) count += vertex.Contains(i) ? 1 : 0;
      if (count != p->budgets[b]) return false;
    }
    return true;
  }
  if (const auto* g = std::get_if<GraphicMatroid>(&spec)) {
    if (!vertex.is_integral() || vertex.dimension() != g->graph.num_edges()) {
      return false;
    }
    const int full_rank = g->graph.num_nodes - CountComponents(g->graph);
    return vertex.size() == full_rank && IsForest(g->graph, vertex.indices());
  }
  const auto& s = std::get<FractionalStableSet>(spec);
  if (vertex.dimension() != s.graph.num_nodes) return false;
  for (const auto& [u, v] : s.graph.edges) {
    if (vertex.value(u) + vertex.value(v) > 1.0) return false;
  }
  return true;
}

bool DecompositionReport::ExactPasses(double tol) const {
  return probability_sum_error <= tol && reconstruction_error <= tol &&
         infeasible_pairs.empty() && invalid_probabilities.empty() &&
         iterations <= iteration_bound;
}

std::string DecompositionReport::DebugString() const {
  return absl::StrCat("prob_sum_error=", probability_sum_error,
                      " reconstruction_error=", reconstruction_error,
                      " infeasible=[", absl::StrJoin(infeasible_pairs, ","),
                      "] bad_p=[", absl::StrJoin(invalid_probabilities, ","),
                      "] iterations=", iterations, "/", iteration_bound);
}

DecompositionReport ValidateDecomposition(const Decomposition& decomposition,
                                          const ConstraintSpec& spec,
                                          std::span<const double> x) {
  DecompositionReport report;
  const int n = static_cast<int>(x.size());
  report.probability_sum_error = std::abs(1.0 - decomposition.ProbabilitySum());
  report.iterations = decomposition.iterations;
  switch (FamilyOf(spec)) {
    case Family::kCardinality:
    case Family::kPartition:
      report.iteration_bound = n;
      break;
    case Family::kGraphic:
    case Family::kStableSet:
      report.iteration_bound = n + 1;
      break;
  }
  std::vector<double> rebuilt(n, 0.0);
  for (int t = 0; t < static_cast<int>(decomposition.pairs.size()); ++t) {
    const DecompositionPair& pair = decomposition.pairs[t];
    if (!(pair.probability >= 0.0 && pair.probability <= 1.0 + 1e-12)) {
      report.invalid_probabilities.push_back(t);
    }
    if (pair.vertex.dimension() != n) {
      report.infeasible_pairs.push_back(t);
      continue;
    }
    if (!IsFeasibleVertex(spec, pair.vertex)) report.infeasible_pairs.push_back(t);
    pair.vertex.AddScaledTo(pair.probability, rebuilt);
  }
  report.reconstruction_error = InfinityNormDistance(rebuilt, x);
  return report;
}

}  // namespace polydec
