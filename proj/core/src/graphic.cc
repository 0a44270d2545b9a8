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

#include "polydec/graphic.h"

#include <Eigen/Cholesky>
#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"

namespace polydec {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kMembershipSlack = 1e-9;

std::vector<int> MaskToEdges(uint32_t mask) {
  std::vector<int> edges;
  for (int e = 0; mask != 0; ++e, mask >>= 1) {
    if (mask & 1u) edges.push_back(e);
  }
  return edges;
}

// Per-step quantities x(F) and |F n S| for every edge subset F.
struct SubsetSums {
  std::vector<double> weight;
  std::vector<uint8_t> overlap;
};

SubsetSums ComputeSubsetSums(std::span<const double> x,
                             const VertexSet& forest) {
  const int m = static_cast<int>(x.size());
  const uint32_t count = 1u << m;
  SubsetSums sums;
  sums.weight.assign(count, 0.0);
  sums.overlap.assign(count, 0);
  for (uint32_t mask = 1; mask < count; ++mask) {
    const int low = std::countr_zero(mask);
    const uint32_t rest = mask & (mask - 1);
    sums.weight[mask] = sums.weight[rest] + x[low];
    sums.overlap[mask] = sums.overlap[rest] + (forest.Contains(low) ? 1 : 0);
  }
  return sums;
}

GMinimum MinimizeG(const RankTable& ranks, const SubsetSums& sums,
                   double lambda) {
  GMinimum best;
  const uint32_t count = 1u << ranks.num_edges();
  for (uint32_t mask = 1; mask < count; ++mask) {
    const double g = (1.0 - lambda) * ranks.rank(mask) - sums.weight[mask] +
                     lambda * sums.overlap[mask];
    if (g < best.value) {
      best.value = g;
      best.mask = mask;
    }
  }
  return best;
}

// Edges of a maximal chain of tight sets, one layer per link of the chain.
// Taking the layers in order keeps the forest on the minimal face of x, which
// plain Kruskal does not guarantee once a proper subset is tight.
std::vector<int> TightLayers(const RankTable& ranks,
                             std::span<const double> x) {
  const int m = ranks.num_edges();
  const SubsetSums sums = ComputeSubsetSums(x, VertexSet());
  std::vector<uint32_t> tight;
  const uint32_t count = 1u << m;
  for (uint32_t mask = 1; mask + 1 < count; ++mask) {
    if (std::abs(sums.weight[mask] - ranks.rank(mask)) <= kMembershipSlack) {
      tight.push_back(mask);
    }
  }
  std::vector<int> layer(m, 0);
  uint32_t current = 0;
  int depth = 0;
  while (true) {
    uint32_t next = 0;
    int best = m + 1;
    for (uint32_t mask : tight) {
      if ((mask & current) != current || mask == current) continue;
      const int size = std::popcount(mask);
      if (size < best) {
        best = size;
        next = mask;
      }
    }
    if (next == 0) break;
    ++depth;
    for (uint32_t bits = next & ~current; bits != 0; bits &= bits - 1) {
      layer[std::countr_zero(bits)] = depth;
    }
    current = next;
  }
  for (int e = 0; e < m; ++e) {
    if (!((current >> e) & 1u)) layer[e] = depth + 1;
  }
  return layer;
}

absl::Status CheckEdgeCount(int m) {
  if (m > kBruteForceEdgeCutoff) {
    return absl::ResourceExhaustedError(absl::StrCat(
        m, " edges exceed the brute-force cutoff of ", kBruteForceEdgeCutoff));
  }
  return absl::OkStatus();
}

}  // namespace

VertexSet MaxSpanningForest(std::span<const double> weights,
                            const Graph& graph) {
  std::vector<int> order;
  for (int e = 0; e < graph.num_edges(); ++e) {
    if (weights[e] > kZeroWeight) order.push_back(e);
  }
  std::stable_sort(order.begin(), order.end(), [&weights](int a, int b) {
    return weights[a] > weights[b];
  });
  UnionFind components(graph.num_nodes);
  std::vector<int> chosen;
  for (int e : order) {
    if (components.Union(graph.edges[e].first, graph.edges[e].second)) {
      chosen.push_back(e);
    }
  }
  return VertexSet::FromUnsorted(graph.num_edges(), std::move(chosen));
}

absl::StatusOr<std::shared_ptr<const RankTable>> RankTable::Build(
    const Graph& graph) {
  const int m = graph.num_edges();
  if (absl::Status s = CheckEdgeCount(m); !s.ok()) return s;
  auto table = std::make_shared<RankTable>();
  table->num_edges_ = m;
  const uint32_t count = 1u << m;
  table->ranks_.assign(count, 0);
  for (uint32_t mask = 1; mask < count; ++mask) {
    UnionFind components(graph.num_nodes);
    int rank = 0;
    for (uint32_t bits = mask; bits != 0; bits &= bits - 1) {
      const auto& [u, v] = graph.edges[std::countr_zero(bits)];
      if (components.Union(u, v)) ++rank;
    }
    table->ranks_[mask] = static_cast<uint8_t>(rank);
  }
  return std::shared_ptr<const RankTable>(std::move(table));
}

absl::StatusOr<GMinimum> MinGLambda(const Graph& graph,
                                    std::span<const double> x,
                                    const VertexSet& forest, double lambda) {
  if (static_cast<int>(x.size()) != graph.num_edges()) {
    return absl::InvalidArgumentError("one value per edge required");
  }
  absl::StatusOr<std::shared_ptr<const RankTable>> ranks =
      RankTable::Build(graph);
  if (!ranks.ok()) return ranks.status();
  GMinimum best = MinimizeG(**ranks, ComputeSubsetSums(x, forest), lambda);
  best.face = MaskToEdges(best.mask);
  return best;
}

absl::StatusOr<GraphicStep> GraphicStepCoefficient(const Graph& graph,
                                                   std::span<const double> x,
                                                   const VertexSet& forest,
                                                   double tol) {
  absl::StatusOr<std::shared_ptr<const RankTable>> ranks =
      RankTable::Build(graph);
  if (!ranks.ok()) return ranks.status();
  return GraphicStepCoefficient(**ranks, x, forest, tol);
}

absl::StatusOr<GraphicStep> GraphicStepCoefficient(const RankTable& ranks,
                                                   std::span<const double> x,
                                                   const VertexSet& forest,
                                                   double tol) {
  const int m = ranks.num_edges();
  if (static_cast<int>(x.size()) != m) {
    return absl::InvalidArgumentError("one value per edge required");
  }
  GraphicStep step;
  step.trace.forest = forest;
  StepCoefficient& coef = step.coefficient;

  double min_in = kInf, max_out = -kInf;
  int arg_in = -1, arg_out = -1;
  for (int e = 0; e < m; ++e) {
    if (forest.Contains(e)) {
      if (x[e] < min_in) {
        min_in = x[e];
        arg_in = e;
      }
    } else if (x[e] > max_out) {
      max_out = x[e];
      arg_out = e;
    }
  }
  const double out_term = arg_out >= 0 ? 1.0 - max_out : kInf;
  const double box = std::min({min_in, out_term, 1.0});

  const SubsetSums sums = ComputeSubsetSums(x, forest);
  const GMinimum at_zero = MinimizeG(ranks, sums, 0.0);
  if (at_zero.value < -kMembershipSlack) {
    return absl::OutOfRangeError(absl::StrCat(
        "rank constraint violated by ", -at_zero.value, " on edges {",
        absl::StrJoin(MaskToEdges(at_zero.mask), ","), "}"));
  }
  // Rounding noise already present at lambda = 0 is not a violation.
  const double threshold = std::min(0.0, at_zero.value) - 1e-12;
  auto feasible = [&](double lambda) {
    return MinimizeG(ranks, sums, lambda).value >= threshold;
  };

  double lo = 0.0, hi = box;
  int iterations = 0;
  if (feasible(hi)) {
    lo = hi;
  } else {
    while (iterations < kLambdaSearchIterations && hi - lo > tol) {
      const double mid = 0.5 * (lo + hi);
      (feasible(mid) ? lo : hi) = mid;
      ++iterations;
    }
  }
  step.trace.lambda_star = lo;
  step.trace.search_iterations = iterations;

  const GMinimum probe = MinimizeG(ranks, sums, lo + 10.0 * tol);
  if (probe.value < threshold && probe.mask != 0) {
    const int rank = ranks.rank(probe.mask);
    const int overlap = sums.overlap[probe.mask];
    if (overlap < rank) {
      double ratio = (rank - sums.weight[probe.mask]) / (rank - overlap);
      // Faces tied with the recovered one bind the same way; the smallest is
      // taken so rounding noise does not pick between them.
      uint32_t chosen = probe.mask;
      const double limit = ratio + kBindingTieWindow;
      for (uint32_t mask = 1; mask < (1u << m); ++mask) {
        const int r = ranks.rank(mask);
        const int o = sums.overlap[mask];
        if (o >= r) continue;
        const double q = (r - sums.weight[mask]) / (r - o);
        if (q > limit) continue;
        const int size = std::popcount(mask), chosen_size = std::popcount(chosen);
        if (size < chosen_size || (size == chosen_size && mask < chosen)) {
          chosen = mask;
          ratio = q;
        }
      }
      const int face_rank = ranks.rank(chosen);
      const double denom = face_rank - sums.overlap[chosen];
      if (ratio <= box + 1e-12) {
        coef.value = std::clamp(ratio, 0.0, 1.0);
        coef.kind = BindingKind::kRankFace;
        coef.face = MaskToEdges(chosen);
        coef.index = -1;
        coef.functional.constant = face_rank / denom;
        for (int e : coef.face) coef.functional.terms.push_back({e, -1.0 / denom});
        step.trace.binding = GraphicBinding::kRankFace;
        step.trace.face = coef.face;
        step.trace.face_rank = face_rank;
        step.trace.face_overlap = sums.overlap[chosen];
        return step;
      }
    }
  }

  if (arg_in >= 0 && min_in <= out_term + kBindingTieWindow && min_in < 1.0) {
    coef.value = min_in;
    coef.kind = BindingKind::kMinInSet;
    coef.index = arg_in;
    coef.functional.terms = {{arg_in, 1.0}};
    step.trace.binding = GraphicBinding::kMinInForest;
    step.trace.edge = arg_in;
  } else if (arg_out >= 0 && out_term < 1.0) {
    coef.value = out_term;
    coef.kind = BindingKind::kOneMinusMaxOutside;
    coef.index = arg_out;
    coef.functional.constant = 1.0;
    coef.functional.terms = {{arg_out, -1.0}};
    step.trace.binding = GraphicBinding::kOneMinusMaxOutside;
    step.trace.edge = arg_out;
  } else {
    coef.value = 1.0;
    coef.kind = BindingKind::kTerminal;
    coef.functional.constant = 1.0;
  }
  return step;
}

absl::Status CheckInGraphicBasePolytope(std::span<const double> x,
                                        const Graph& graph) {
  const int m = graph.num_edges();
  if (static_cast<int>(x.size()) != m) {
    return absl::InvalidArgumentError(
        absl::StrCat("point has dimension ", x.size(), ", graph has ", m,
                     " edges"));
  }
  if (absl::Status s = CheckEdgeCount(m); !s.ok()) return s;
  double sum = 0.0;
  for (int e = 0; e < m; ++e) {
    if (!(x[e] >= -kFeasibilityTolerance &&
          x[e] <= 1.0 + kFeasibilityTolerance)) {
      return absl::OutOfRangeError(
          absl::StrCat("edge ", e, " value ", x[e], " outside [0, 1]"));
    }
    sum += x[e];
  }
  const int full_rank = graph.num_nodes - CountComponents(graph);
  if (std::abs(sum - full_rank) > 1e-7) {
    return absl::InvalidArgumentError(absl::StrCat(
        "edge values sum to ", sum, ", expected rank ", full_rank));
  }
  absl::StatusOr<GMinimum> at_zero = MinGLambda(graph, x, VertexSet(), 0.0);
  if (!at_zero.ok()) return at_zero.status();
  if (at_zero->value < -kMembershipSlack) {
    return absl::OutOfRangeError(absl::StrCat(
        "rank constraint violated on edges {",
        absl::StrJoin(at_zero->face, ","), "}"));
  }
  return absl::OkStatus();
}

absl::StatusOr<VertexSet> GraphicFamily::Vertex(
    std::span<const double> x) const {
  const std::vector<int> layer = TightLayers(*ranks_, x);
  std::vector<int> order;
  for (int e = 0; e < graph_.num_edges(); ++e) {
    if (x[e] > kZeroWeight) order.push_back(e);
  }
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    if (layer[a] != layer[b]) return layer[a] < layer[b];
    return x[a] > x[b];
  });
  UnionFind components(graph_.num_nodes);
  std::vector<int> chosen;
  for (int e : order) {
    if (components.Union(graph_.edges[e].first, graph_.edges[e].second)) {
      chosen.push_back(e);
    }
  }
  return VertexSet::FromUnsorted(graph_.num_edges(), std::move(chosen));
}

absl::StatusOr<StepCoefficient> GraphicFamily::MaxStep(
    std::span<const double> x, const VertexSet& vertex) const {
  absl::StatusOr<GraphicStep> step =
      GraphicStepCoefficient(*ranks_, x, vertex);
  if (!step.ok()) return step.status();
  return std::move(step->coefficient);
}

absl::StatusOr<TapedDecomposition> DecomposeGraphicWithTape(
    std::span<const double> x, const Graph& graph,
    const DecompositionConfig& config) {
  if (absl::Status s = CheckInGraphicBasePolytope(x, graph); !s.ok()) {
    return s;
  }
  absl::StatusOr<std::shared_ptr<const RankTable>> ranks =
      RankTable::Build(graph);
  if (!ranks.ok()) return ranks.status();
  return RunDecomposition(GraphicFamily(graph, *std::move(ranks)), x, config);
}

absl::StatusOr<Decomposition> DecomposeGraphic(
    std::span<const double> x, const Graph& graph,
    const DecompositionConfig& config) {
  absl::StatusOr<TapedDecomposition> taped =
      DecomposeGraphicWithTape(x, graph, config);
  if (!taped.ok()) return taped.status();
  return std::move(taped->decomposition);
}

absl::StatusOr<std::vector<double>> SpanningTreeMarginals(
    const Graph& graph, std::span<const double> weights) {
  const int n = graph.num_nodes;
  const int m = graph.num_edges();
  if (static_cast<int>(weights.size()) != m) {
    return absl::InvalidArgumentError(
        absl::StrCat(weights.size(), " weights for ", m, " edges"));
  }
  for (int e = 0; e < m; ++e) {
    if (!(weights[e] > 0.0) || !std::isfinite(weights[e])) {
      return absl::InvalidArgumentError(
          absl::StrCat("edge ", e, " has nonpositive weight ", weights[e]));
    }
  }
  if (n == 0 || CountComponents(graph) != 1) {
    return absl::FailedPreconditionError("graph is not connected");
  }
  if (n == 1) return std::vector<double>();

  const int reduced = n - 1;
  Eigen::MatrixXd laplacian = Eigen::MatrixXd::Zero(reduced, reduced);
  for (int e = 0; e < m; ++e) {
    const auto [u, v] = graph.edges[e];
    const double w = weights[e];
    if (u < reduced) laplacian(u, u) += w;
    if (v < reduced) laplacian(v, v) += w;
    if (u < reduced && v < reduced) {
      laplacian(u, v) -= w;
      laplacian(v, u) -= w;
    }
  }
  Eigen::LLT<Eigen::MatrixXd> factor(laplacian);
  if (factor.info() != Eigen::Success) {
    return absl::InternalError("reduced Laplacian is not positive definite");
  }
  std::vector<double> marginals(m);
  Eigen::VectorXd incidence(reduced);
  for (int e = 0; e < m; ++e) {
    const auto [u, v] = graph.edges[e];
    incidence.setZero();
    if (u < reduced) incidence(u) = 1.0;
    if (v < reduced) incidence(v) = -1.0;
    const Eigen::VectorXd solved = factor.solve(incidence);
    marginals[e] = weights[e] * incidence.dot(solved);
  }
  return marginals;
}

}  // namespace polydec
