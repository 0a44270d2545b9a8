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

// Graphic matroid base polytope over the edges of a graph:
//   x(F) <= r(F) for every edge set F, x(E) = r(E), x >= 0.
// Rank constraints are checked by brute-force minimization over all 2^m edge
// subsets, so the edge count is capped at kBruteForceEdgeCutoff.

#ifndef POLYDEC_GRAPHIC_H_
#define POLYDEC_GRAPHIC_H_

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "polydec/decomposition.h"
#include "polydec/driver.h"
#include "polydec/graph.h"
#include "polydec/vertex_set.h"

namespace polydec {

inline constexpr int kBruteForceEdgeCutoff = 20;
inline constexpr double kZeroWeight = 1e-12;
inline constexpr double kLambdaTolerance = 1e-10;
inline constexpr int kLambdaSearchIterations = 60;

// Kruskal on edges ordered by (weight desc, index asc); weights <= 1e-12 are
// treated as absent.
VertexSet MaxSpanningForest(std::span<const double> weights,
                            const Graph& graph);

// r(F) for every subset F of the edges, indexed by bitmask.
class RankTable {
 public:
  static absl::StatusOr<std::shared_ptr<const RankTable>> Build(
      const Graph& graph);

  int num_edges() const { return num_edges_; }
  int rank(uint32_t mask) const { return ranks_[mask]; }

 private:
  int num_edges_ = 0;
  std::vector<uint8_t> ranks_;
};

struct GMinimum {
  double value = 0.0;
  uint32_t mask = 0;
  std::vector<int> face;  // edges of the minimizing subset
};

// min over F of g(F) = (1 - lambda) r(F) - x(F) + lambda |F n S|; the first
// minimizer in bitmask order wins ties.
absl::StatusOr<GMinimum> MinGLambda(const Graph& graph,
                                    std::span<const double> x,
                                    const VertexSet& forest, double lambda);

enum class GraphicBinding { kMinInForest, kOneMinusMaxOutside, kRankFace };

struct GraphicCoefficientTrace {
  VertexSet forest;
  GraphicBinding binding = GraphicBinding::kRankFace;
  int edge = -1;                 // for the box bindings
  std::vector<int> face;         // for the rank face binding
  int face_rank = 0;
  int face_overlap = 0;          // |S n F|
  double lambda_star = 0.0;
  int search_iterations = 0;
};

struct GraphicStep {
  StepCoefficient coefficient;
  GraphicCoefficientTrace trace;
};

// Largest feasible step from x toward the forest, found by binary search on
// lambda and re-derived in closed form from the recovered binding face.
absl::StatusOr<GraphicStep> GraphicStepCoefficient(
    const Graph& graph, std::span<const double> x, const VertexSet& forest,
    double tol = kLambdaTolerance);

absl::StatusOr<GraphicStep> GraphicStepCoefficient(
    const RankTable& ranks, std::span<const double> x,
    const VertexSet& forest, double tol = kLambdaTolerance);

absl::Status CheckInGraphicBasePolytope(std::span<const double> x,
                                        const Graph& graph);

class GraphicFamily : public PolytopeFamily {
 public:
  GraphicFamily(const Graph& graph, std::shared_ptr<const RankTable> ranks)
      : graph_(graph), ranks_(std::move(ranks)) {}

  int dimension() const override { return graph_.num_edges(); }
  absl::StatusOr<VertexSet> Vertex(std::span<const double> x) const override;
  absl::StatusOr<StepCoefficient> MaxStep(
      std::span<const double> x, const VertexSet& vertex) const override;

 private:
  const Graph& graph_;
  std::shared_ptr<const RankTable> ranks_;
};

absl::StatusOr<Decomposition> DecomposeGraphic(
    std::span<const double> x, const Graph& graph,
    const DecompositionConfig& config = {});

absl::StatusOr<TapedDecomposition> DecomposeGraphicWithTape(
    std::span<const double> x, const Graph& graph,
    const DecompositionConfig& config = {});

// Weighted spanning-tree edge marginals mu_e = w_e * b_e^T L^+ b_e, computed
// from the Laplacian with the highest-index node removed.
absl::StatusOr<std::vector<double>> SpanningTreeMarginals(
    const Graph& graph, std::span<const double> weights);

}  // namespace polydec

#endif  // POLYDEC_GRAPHIC_H_
