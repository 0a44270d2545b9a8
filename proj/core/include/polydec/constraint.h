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

#ifndef POLYDEC_CONSTRAINT_H_
#define POLYDEC_CONSTRAINT_H_

#include <span>
#include <string>
#include <variant>
#include <vector>

#include "absl/status/status.h"
#include "polydec/decomposition.h"
#include "polydec/graph.h"
#include "polydec/vertex_set.h"

namespace polydec {

enum class Family { kCardinality, kPartition, kGraphic, kStableSet };

std::string FamilyName(Family family);

// Exactly k elements.
struct Cardinality {
  int k = 1;
};

// Exactly budgets[i] elements from each disjoint block; the blocks cover
// {0, ..., n-1}.
struct PartitionMatroid {
  std::vector<std::vector<int>> blocks;
  std::vector<int> budgets;

  int dimension() const;
  // Block id per element.
  std::vector<int> BlockOf() const;
};

// Full spanning forests of the graph; the ground set is the edge set.
struct GraphicMatroid {
  Graph graph;
};

// Fractional stable set polytope: x in [0,1]^V, x(u) + x(v) <= 1 per edge.
// `slack` is only used when projecting into the polytope.
struct FractionalStableSet {
  Graph graph;
  double slack = 0.0;
};

using ConstraintSpec =
    std::variant<Cardinality, PartitionMatroid, GraphicMatroid,
                 FractionalStableSet>;

// A point of [0,1]^n tagged with the family whose polytope it lives in.
struct Point {
  std::vector<double> values;
  Family family = Family::kCardinality;
};

Family FamilyOf(const ConstraintSpec& spec);

// Checks the structural invariants of the constraint for ambient dimension
// `dimension` (n for node/element families, m for the graphic family).
absl::Status ValidateConstraint(const ConstraintSpec& spec, int dimension);

// Ambient dimension implied by the constraint, or -1 when it depends on the
// point (cardinality).
int ConstraintDimension(const ConstraintSpec& spec);

// True when `vertex` is a feasible solution of `spec` (for the stable set
// family: a point of {0, 1/2, 1}^n satisfying every edge constraint).
bool IsFeasibleVertex(const ConstraintSpec& spec, const VertexSet& vertex);

struct DecompositionReport {
  double probability_sum_error = 0.0;  // |1 - sum p|
  double reconstruction_error = 0.0;   // infinity norm
  std::vector<int> infeasible_pairs;
  std::vector<int> invalid_probabilities;  // p outside [0, 1]
  int iterations = 0;
  int iteration_bound = 0;

  // All checks at `tol`, including the iteration bound of exact decompositions.
  bool ExactPasses(double tol) const;
  std::string DebugString() const;
};

// Report-only; never fails.
DecompositionReport ValidateDecomposition(const Decomposition& decomposition,
                                          const ConstraintSpec& spec,
                                          std::span<const double> x);

}  // namespace polydec

#endif  // POLYDEC_CONSTRAINT_H_
