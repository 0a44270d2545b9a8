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

#include "polydec/fstab.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "absl/strings/str_cat.h"
#include "polydec/min_cut.h"

namespace polydec {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kTight = 1e-9;
constexpr int kMaxProjectionPasses = 64;

// Per-coordinate state while fixing the lexicographic maximizer.
enum Fix : int8_t { kFree = -1, kZero = 0, kHalf = 1, kOne = 2 };

// max w . y over the polytope with some coordinates fixed, as half the
// maximum-weight independent set of the bipartite double cover. Copy i+ is
// on the left, i- on the right; y_i = (in(i+) + in(i-)) / 2.
double ConstrainedOptimum(std::span<const double> w, const Graph& graph,
                          std::span<const int8_t> fixed) {
  const int n = graph.num_nodes;
  std::vector<int8_t> left(n), right(n);  // -1 absent, 0 free, 1 forced in
  for (int i = 0; i < n; ++i) {
    switch (fixed[i]) {
      case kOne:
        left[i] = right[i] = 1;
        break;
      case kHalf:
        left[i] = 1;
        right[i] = -1;
        break;
      case kZero:
        left[i] = right[i] = -1;
        break;
      default:
        left[i] = right[i] = w[i] > 0.0 ? 0 : -1;
    }
  }
  for (const auto& [u, v] : graph.edges) {
    if ((left[u] == 1 && right[v] == 1) || (left[v] == 1 && right[u] == 1)) {
      return -kInf;
    }
  }
  const int source = 0, sink = 1;
  MaxFlow flow(2 + 2 * n);
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    const double half = 0.5 * w[i];
    if (left[i] >= 0) {
      total += half;
      flow.AddEdge(source, 2 + i, left[i] == 1 ? kInf : half);
    }
    if (right[i] >= 0) {
      total += half;
      flow.AddEdge(2 + n + i, sink, right[i] == 1 ? kInf : half);
    }
  }
  for (const auto& [u, v] : graph.edges) {
    if (left[u] >= 0 && right[v] >= 0) flow.AddEdge(2 + u, 2 + n + v, kInf);
    if (left[v] >= 0 && right[u] >= 0) flow.AddEdge(2 + v, 2 + n + u, kInf);
  }
  return total - flow.Solve(source, sink);
}

struct Constraint {
  std::vector<std::pair<int, double>> normal;
  double offset;
};

Constraint ConstraintById(const Graph& graph, int id) {
  const int n = graph.num_nodes;
  if (id < n) return {{{id, -1.0}}, 0.0};
  if (id < 2 * n) return {{{id - n, 1.0}}, 1.0};
  const auto [u, v] = graph.edges[id - 2 * n];
  return {{{u, 1.0}, {v, 1.0}}, 1.0};
}

double Dot(const std::vector<std::pair<int, double>>& normal,
           std::span<const double> x) {
  double sum = 0.0;
  for (const auto& [i, c] : normal) sum += c * x[i];
  return sum;
}

struct ProjectionPass {
  std::vector<int> degree;
  int worst_edge = -1;
  double eta = 0.0;
  std::vector<double> before;  // input to the pass
};

// Runs the correction passes, recording each for the backward sweep.
std::vector<double> RunProjection(std::span<const double> x,
                                  const Graph& graph, double slack,
                                  std::vector<ProjectionPass>* passes) {
  const int n = graph.num_nodes;
  std::vector<double> y(n);
  for (int i = 0; i < n; ++i) y[i] = std::clamp(x[i], 0.0, 1.0);
  for (int pass = 0; pass < kMaxProjectionPasses; ++pass) {
    ProjectionPass record;
    record.degree.assign(n, 0);
    bool violated = false;
    for (const auto& [u, v] : graph.edges) {
      if (y[u] + y[v] + slack - 1.0 > 0.0) {
        ++record.degree[u];
        ++record.degree[v];
        violated = true;
      }
    }
    if (!violated) break;
    for (int e = 0; e < graph.num_edges(); ++e) {
      const auto [u, v] = graph.edges[e];
      const double excess = y[u] + y[v] + slack - 1.0;
      if (excess <= 0.0) continue;
      const double eta = excess / (record.degree[u] + record.degree[v]);
      if (eta > record.eta) {
        record.eta = eta;
        record.worst_edge = e;
      }
    }
    record.before = y;
    for (int i = 0; i < n; ++i) {
      y[i] = std::clamp(y[i] - record.eta * record.degree[i], 0.0, 1.0);
    }
    if (passes != nullptr) passes->push_back(std::move(record));
  }
  return y;
}

}  // namespace

absl::StatusOr<std::vector<double>> ProjectToFstab(std::span<const double> x,
                                                   const Graph& graph,
                                                   double slack) {
  if (static_cast<int>(x.size()) != graph.num_nodes) {
    return absl::InvalidArgumentError(
        absl::StrCat("point has dimension ", x.size(), ", graph has ",
                     graph.num_nodes, " nodes"));
  }
  if (!(slack >= 0.0 && slack < 1.0)) {
    return absl::InvalidArgumentError("slack must lie in [0, 1)");
  }
  return RunProjection(x, graph, slack, nullptr);
}

std::vector<double> ProjectToFstabVjp(std::span<const double> x,
                                      const Graph& graph, double slack,
                                      std::span<const double> x_bar) {
  const int n = graph.num_nodes;
  std::vector<ProjectionPass> passes;
  RunProjection(x, graph, slack, &passes);
  std::vector<double> bar(x_bar.begin(), x_bar.end());
  for (auto it = passes.rbegin(); it != passes.rend(); ++it) {
    const ProjectionPass& pass = *it;
    // Output i = before_i - eta d_i where that lies strictly inside [0, 1].
    double eta_bar = 0.0;
    for (int i = 0; i < n; ++i) {
      const double out = pass.before[i] - pass.eta * pass.degree[i];
      if (out <= 0.0 || out >= 1.0) {
        bar[i] = 0.0;
      } else {
        eta_bar -= bar[i] * pass.degree[i];
      }
    }
    const auto [u, v] = graph.edges[pass.worst_edge];
    const double scale =
        eta_bar / (pass.degree[u] + pass.degree[v]);
    bar[u] += scale;
    bar[v] += scale;
  }
  for (int i = 0; i < n; ++i) {
    if (x[i] < 0.0 || x[i] > 1.0) bar[i] = 0.0;
  }
  return bar;
}

double FstabOptimum(std::span<const double> weights, const Graph& graph) {
  std::vector<int8_t> fixed(graph.num_nodes, kFree);
  return ConstrainedOptimum(weights, graph, fixed);
}

absl::StatusOr<VertexSet> FstabLexMaxVertex(std::span<const double> weights,
                                            const Graph& graph) {
  const int n = graph.num_nodes;
  if (static_cast<int>(weights.size()) != n) {
    return absl::InvalidArgumentError("one weight per node required");
  }
  std::vector<int8_t> fixed(n, kFree);
  const double optimum = ConstrainedOptimum(weights, graph, fixed);
  const double tol = 1e-9 * std::max(1.0, std::abs(optimum));
  for (int i = 0; i < n; ++i) {
    fixed[i] = kZero;
    for (int8_t candidate : {kOne, kHalf}) {
      std::vector<int8_t> trial = fixed;
      trial[i] = candidate;
      if (ConstrainedOptimum(weights, graph, trial) >= optimum - tol) {
        fixed[i] = candidate;
        break;
      }
    }
  }
  std::vector<double> values(n);
  for (int i = 0; i < n; ++i) values[i] = 0.5 * fixed[i];
  return VertexSet::HalfIntegral(std::move(values));
}

absl::StatusOr<VertexSet> FstabVertex(std::span<const double> x,
                                      const Graph& graph) {
  const int n = graph.num_nodes;
  if (static_cast<int>(x.size()) != n) {
    return absl::InvalidArgumentError("one value per node required");
  }
  // Face normals are worth more than any difference in x . y between
  // half-integral points.
  const double big = 2.0 * n + 2.0;
  std::vector<double> weights(x.begin(), x.end());
  for (int i = 0; i < n; ++i) {
    if (x[i] <= kTight) weights[i] -= big;
    if (x[i] >= 1.0 - kTight) weights[i] += big;
  }
  for (const auto& [u, v] : graph.edges) {
    if (x[u] + x[v] >= 1.0 - kTight) {
      weights[u] += big;
      weights[v] += big;
    }
  }
  return FstabLexMaxVertex(weights, graph);
}

absl::StatusOr<FstabStep> FstabStepCoefficient(std::span<const double> x,
                                               const VertexSet& vertex,
                                               const Graph& graph) {
  const int n = graph.num_nodes;
  if (static_cast<int>(x.size()) != n || vertex.dimension() != n) {
    return absl::InvalidArgumentError("dimension mismatch");
  }
  const std::vector<double> v = vertex.ToDense();
  const int num_constraints = 2 * n + graph.num_edges();
  FstabStep best;
  double best_value = kInf;
  for (int id = 0; id < num_constraints; ++id) {
    Constraint c = ConstraintById(graph, id);
    const double vertex_value = Dot(c.normal, v);
    const double denom = c.offset - vertex_value;
    if (denom <= kDefaultNumericGuard) continue;
    const double ratio = (c.offset - Dot(c.normal, x)) / denom;
    if (ratio < best_value) {
      best_value = ratio;
      best.record = {id, std::move(c.normal), c.offset, vertex_value};
    }
  }
  StepCoefficient& coef = best.coefficient;
  if (best.record.id < 0 || best_value >= 1.0) {
    coef.value = 1.0;
    coef.kind = BindingKind::kTerminal;
    coef.functional.constant = 1.0;
    return best;
  }
  const double denom = best.record.offset - best.record.vertex_value;
  coef.value = std::max(0.0, best_value);
  coef.kind = BindingKind::kPolytopeFacet;
  coef.index = best.record.id;
  coef.functional.constant = best.record.offset / denom;
  for (const auto& [i, z] : best.record.normal) {
    coef.functional.terms.push_back({i, -z / denom});
  }
  return best;
}

absl::Status CheckInFstab(std::span<const double> x, const Graph& graph) {
  const int n = graph.num_nodes;
  if (static_cast<int>(x.size()) != n) {
    return absl::InvalidArgumentError(
        absl::StrCat("point has dimension ", x.size(), ", graph has ", n,
                     " nodes"));
  }
  for (int i = 0; i < n; ++i) {
    if (!(x[i] >= -kFeasibilityTolerance &&
          x[i] <= 1.0 + kFeasibilityTolerance)) {
      return absl::OutOfRangeError(
          absl::StrCat("entry ", i, " = ", x[i], " outside [0, 1]"));
    }
  }
  for (const auto& [u, v] : graph.edges) {
    if (x[u] + x[v] > 1.0 + kFeasibilityTolerance) {
      return absl::OutOfRangeError(absl::StrCat(
          "edge (", u, ",", v, ") has x_u + x_v = ", x[u] + x[v]));
    }
  }
  return absl::OkStatus();
}

absl::StatusOr<VertexSet> FstabFamily::Vertex(std::span<const double> x) const {
  return FstabVertex(x, graph_);
}

absl::StatusOr<StepCoefficient> FstabFamily::MaxStep(
    std::span<const double> x, const VertexSet& vertex) const {
  absl::StatusOr<FstabStep> step = FstabStepCoefficient(x, vertex, graph_);
  if (!step.ok()) return step.status();
  return std::move(step->coefficient);
}

absl::StatusOr<TapedDecomposition> DecomposeFstabWithTape(
    std::span<const double> x, const Graph& graph,
    const DecompositionConfig& config) {
  if (absl::Status s = CheckInFstab(x, graph); !s.ok()) return s;
  return RunDecomposition(FstabFamily(graph), x, config);
}

absl::StatusOr<Decomposition> DecomposeFstab(
    std::span<const double> x, const Graph& graph,
    const DecompositionConfig& config) {
  absl::StatusOr<TapedDecomposition> taped =
      DecomposeFstabWithTape(x, graph, config);
  if (!taped.ok()) return taped.status();
  return std::move(taped->decomposition);
}

}  // namespace polydec
