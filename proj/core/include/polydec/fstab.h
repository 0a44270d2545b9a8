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

// Fractional stable set polytope of a graph G = (V, E):
//   { x in [0,1]^V : x(u) + x(v) <= 1 for every edge uv }.
// Its vertices are half-integral.

#ifndef POLYDEC_FSTAB_H_
#define POLYDEC_FSTAB_H_

#include <span>
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "polydec/decomposition.h"
#include "polydec/driver.h"
#include "polydec/graph.h"
#include "polydec/vertex_set.h"

namespace polydec {

// Clamps to [0,1], then applies the edge-violation correction
//   x' = relu(x - eta * d),  eta = max_{violated uv} (x_u + x_v + slack - 1)
//                                                  / (d_u + d_v),
// where d counts violated edges per node, and clamps again. The correction
// is repeated while violations remain.
absl::StatusOr<std::vector<double>> ProjectToFstab(std::span<const double> x,
                                                   const Graph& graph,
                                                   double slack = 0.0);

// Vector-Jacobian product of ProjectToFstab at x.
std::vector<double> ProjectToFstabVjp(std::span<const double> x,
                                      const Graph& graph, double slack,
                                      std::span<const double> x_bar);

// The lexicographically largest maximizer of weights . y over the polytope,
// via minimum cuts on the bipartite double cover with coordinates fixed one
// at a time to the largest value that keeps the optimum.
absl::StatusOr<VertexSet> FstabLexMaxVertex(std::span<const double> weights,
                                            const Graph& graph);

// max weights . y over the polytope.
double FstabOptimum(std::span<const double> weights, const Graph& graph);

// A vertex of the minimal face containing x: the objective adds a large
// multiple of the normals of the constraints tight at x (within 1e-9) to x
// itself, and ties are broken lexicographically.
absl::StatusOr<VertexSet> FstabVertex(std::span<const double> x,
                                      const Graph& graph);

// Constraint z . x <= b. Ids: 0..n-1 are x_i >= 0, n..2n-1 are x_i <= 1,
// 2n + e is the edge constraint of edge e.
struct FstabActiveConstraint {
  int id = -1;
  std::vector<std::pair<int, double>> normal;
  double offset = 0.0;
  double vertex_value = 0.0;  // z . v
};

struct FstabStep {
  StepCoefficient coefficient;
  FstabActiveConstraint record;
};

// min over constraints with b - z.v > 0 of (b - z.x) / (b - z.v); ties go to
// the smallest constraint id. Returns a terminal step when the minimum is at
// least 1 or no constraint qualifies.
absl::StatusOr<FstabStep> FstabStepCoefficient(std::span<const double> x,
                                               const VertexSet& vertex,
                                               const Graph& graph);

absl::Status CheckInFstab(std::span<const double> x, const Graph& graph);

class FstabFamily : public PolytopeFamily {
 public:
  explicit FstabFamily(const Graph& graph) : graph_(graph) {}

  int dimension() const override { return graph_.num_nodes; }
  absl::StatusOr<VertexSet> Vertex(std::span<const double> x) const override;
  absl::StatusOr<StepCoefficient> MaxStep(
      std::span<const double> x, const VertexSet& vertex) const override;

 private:
  const Graph& graph_;
};

absl::StatusOr<Decomposition> DecomposeFstab(
    std::span<const double> x, const Graph& graph,
    const DecompositionConfig& config = {});

absl::StatusOr<TapedDecomposition> DecomposeFstabWithTape(
    std::span<const double> x, const Graph& graph,
    const DecompositionConfig& config = {});

}  // namespace polydec

#endif  // POLYDEC_FSTAB_H_
