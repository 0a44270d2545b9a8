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

#include "polydec/solvers.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <queue>
#include <tuple>

#include "absl/strings/str_cat.h"
#include "polydec/fstab.h"
#include "polydec/graphic.h"
#include "polydec/hypersimplex.h"
#include "polydec/partition.h"

namespace polydec {
namespace {

using Clock = std::chrono::steady_clock;

double MillisecondsSince(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

double Logistic(double t) { return 1.0 / (1.0 + std::exp(-t)); }

// Keeps the best integral set; earlier candidates win ties.
class Incumbent {
 public:
  void Offer(const VertexSet& vertex, double value) {
    if (!found_ || value > value_) {
      found_ = true;
      vertex_ = vertex;
      value_ = value;
    }
  }
  void Offer(const Decomposition& d, const SetObjective& f) {
    absl::StatusOr<RoundedSet> rounded = BestSet(d, f);
    if (rounded.ok()) Offer(rounded->vertex, rounded->value);
  }
  bool found() const { return found_; }
  const VertexSet& vertex() const { return vertex_; }
  double value() const { return value_; }

 private:
  bool found_ = false;
  VertexSet vertex_;
  double value_ = 0.0;
};

}  // namespace

Parameterization::Parameterization(const ConstraintSpec& spec, int dimension,
                                   double marginal_step)
    : spec_(spec), dimension_(dimension), marginal_step_(marginal_step) {}

absl::StatusOr<std::vector<double>> Parameterization::Forward(
    std::span<const double> z) const {
  if (static_cast<int>(z.size()) != dimension_) {
    return absl::InvalidArgumentError("parameter has the wrong dimension");
  }
  if (const auto* c = std::get_if<Cardinality>(&spec_)) {
    return ProjectToHypersimplex(z, c->k);
  }
  if (const auto* p = std::get_if<PartitionMatroid>(&spec_)) {
    return ProjectToPartitionPolytope(z, *p);
  }
  if (const auto* g = std::get_if<GraphicMatroid>(&spec_)) {
    return SpanningTreeMarginals(g->graph, z);
  }
  const auto& s = std::get<FractionalStableSet>(spec_);
  return ProjectToFstab(z, s.graph, s.slack);
}

absl::StatusOr<std::vector<double>> Parameterization::Backward(
    std::span<const double> z, std::span<const double> x_bar) const {
  if (const auto* c = std::get_if<Cardinality>(&spec_)) {
    return ProjectToHypersimplexVjp(z, c->k, x_bar);
  }
  if (const auto* p = std::get_if<PartitionMatroid>(&spec_)) {
    return ProjectToPartitionPolytopeVjp(z, *p, x_bar);
  }
  if (const auto* g = std::get_if<GraphicMatroid>(&spec_)) {
    std::vector<double> w(z.begin(), z.end());
    std::vector<double> z_bar(w.size(), 0.0);
    for (size_t j = 0; j < w.size(); ++j) {
      const double h = marginal_step_ * std::max(1.0, w[j]);
      const double saved = w[j];
      w[j] = saved + h;
      absl::StatusOr<std::vector<double>> up = SpanningTreeMarginals(g->graph, w);
      w[j] = saved - h;
      absl::StatusOr<std::vector<double>> down =
          SpanningTreeMarginals(g->graph, w);
      w[j] = saved;
      if (!up.ok()) return up.status();
      if (!down.ok()) return down.status();
      for (size_t i = 0; i < w.size(); ++i) {
        z_bar[j] += x_bar[i] * ((*up)[i] - (*down)[i]) / (2.0 * h);
      }
    }
    return z_bar;
  }
  const auto& s = std::get<FractionalStableSet>(spec_);
  return ProjectToFstabVjp(z, s.graph, s.slack, x_bar);
}

absl::StatusOr<SolveResult> DirectOptimize(const SetObjective& f,
                                           const ConstraintSpec& spec,
                                           int dimension,
                                           const OptimizeConfig& config) {
  if (config.steps < 0) return absl::InvalidArgumentError("steps must be >= 0");
  if (!(config.adam.learning_rate > 0.0)) {
    return absl::InvalidArgumentError("learning rate must be positive");
  }
  if (absl::Status s = ValidateConstraint(spec, dimension); !s.ok()) return s;
  const auto start = Clock::now();
  const Parameterization param(spec, dimension, config.marginal_step);
  std::vector<double> theta(dimension, 0.0);
  if (config.perturb_init) {
    Rng rng(config.seed, 0, Purpose::kInitialization);
    for (double& t : theta) t = rng.Uniform(-config.init_noise, config.init_noise);
  }
  Adam adam(dimension, config.adam);
  Incumbent incumbent;
  std::vector<double> z(dimension), x;
  double extension = 0.0;
  const int round_every = std::max(1, config.round_every);

  for (int step = 0;; ++step) {
    for (int i = 0; i < dimension; ++i) z[i] = Logistic(theta[i]);
    absl::StatusOr<std::vector<double>> projected = param.Forward(z);
    if (!projected.ok()) return projected.status();
    x = *std::move(projected);
    absl::StatusOr<TapedDecomposition> taped =
        DecomposeWithTape(x, spec, config.decomposition);
    if (!taped.ok()) return taped.status();
    extension = EvaluateExtension(taped->decomposition, f);
    const bool last = step == config.steps;
    if (last || step % round_every == 0) incumbent.Offer(taped->decomposition, f);
    if (last) break;

    const std::vector<double> x_bar = BackpropExtension(taped->tape, f);
    absl::StatusOr<std::vector<double>> z_bar = param.Backward(z, x_bar);
    if (!z_bar.ok()) return z_bar.status();
    std::vector<double> theta_bar(dimension);
    for (int i = 0; i < dimension; ++i) {
      theta_bar[i] = (*z_bar)[i] * z[i] * (1.0 - z[i]);
    }
    adam.AscentStep(theta, theta_bar);
  }
  if (!incumbent.found()) {
    return absl::NotFoundError("no integral vertex was ever produced");
  }
  SolveResult result;
  result.best = incumbent.vertex();
  result.objective = incumbent.value();
  result.extension = extension;
  result.time_ms = MillisecondsSince(start);
  result.iterations = config.steps;
  result.method = "direct";
  result.seed = config.seed;
  result.point = std::move(x);
  return result;
}

absl::StatusOr<MultiScaleResult> MultiScaleSolve(std::span<const double> x,
                                                 const ScaleSchedule& schedule,
                                                 const SetObjective& f,
                                                 const ConstraintSpec& spec,
                                                 uint64_t seed) {
  const auto start = Clock::now();
  const int n = static_cast<int>(x.size());
  Incumbent incumbent;
  std::vector<char> in_pool(n, 0);
  MultiScaleResult out;
  int iterations = 0;
  std::vector<double> point(n);
  for (size_t s = 0; s < schedule.scales.size(); ++s) {
    const double b = schedule.scales[s];
    if (!(b > 0.0 && b <= 1.0)) {
      return absl::InvalidArgumentError(absl::StrCat("scale ", b, " outside (0, 1]"));
    }
    DecompositionConfig config;
    config.scale = b;
    config.floor = b == 1.0 ? 0.0 : schedule.floor;
    config.tolerance = schedule.tolerance;
    config.max_iterations = schedule.max_iterations;
    for (int r = 0; r < std::max(1, schedule.per_scale); ++r) {
      std::copy(x.begin(), x.end(), point.begin());
      if (r > 0) {
        Rng rng(seed, s * 65536 + r, Purpose::kScaleVariation);
        absl::StatusOr<std::vector<int>> vertex = SampleFeasibleSet(spec, n, rng);
        if (!vertex.ok()) return vertex.status();
        for (double& v : point) v *= 1.0 - schedule.mixing;
        for (int i : *vertex) point[i] += schedule.mixing;
      }
      absl::StatusOr<Decomposition> d = Decompose(point, spec, config);
      if (!d.ok()) return d.status();
      iterations += d->iterations;
      for (const DecompositionPair& pair : d->pairs) {
        if (!pair.vertex.is_integral()) continue;
        ++out.candidates;
        incumbent.Offer(pair.vertex, f.ValueOfSet(pair.vertex.indices()));
        for (int i : pair.vertex.indices()) in_pool[i] = 1;
      }
    }
  }
  if (!incumbent.found()) {
    return absl::NotFoundError("no integral vertex in any decomposition");
  }
  for (int i = 0; i < n; ++i) {
    if (in_pool[i]) out.pool.push_back(i);
  }
  out.result.best = incumbent.vertex();
  out.result.objective = incumbent.value();
  out.result.time_ms = MillisecondsSince(start);
  out.result.iterations = iterations;
  out.result.method = "multiscale";
  out.result.seed = seed;
  out.result.point.assign(x.begin(), x.end());
  return out;
}

absl::StatusOr<std::vector<int>> LocalImprove(std::span<const int> set,
                                              std::span<const int> pool,
                                              const SetObjective& f,
                                              const ConstraintSpec& spec,
                                              int dimension, int max_iter) {
  std::vector<int> current(set.begin(), set.end());
  std::sort(current.begin(), current.end());
  auto feasible = [&](const std::vector<int>& candidate) {
    if (std::holds_alternative<Cardinality>(spec)) return true;
    return IsFeasibleVertex(spec, VertexSet::FromUnsorted(dimension, candidate));
  };
  if (!feasible(current)) {
    return absl::InvalidArgumentError("starting set is infeasible");
  }
  double value = f.ValueOfSet(current);
  for (int iter = 0; iter < max_iter; ++iter) {
    double best_value = value;
    int best_out = -1, best_in = -1;
    std::vector<int> candidate;
    for (size_t a = 0; a < current.size(); ++a) {
      for (int j : pool) {
        if (std::binary_search(current.begin(), current.end(), j)) continue;
        candidate = current;
        candidate[a] = j;
        std::sort(candidate.begin(), candidate.end());
        if (!feasible(candidate)) continue;
        const double v = f.ValueOfSet(candidate);
        if (v > best_value) {
          best_value = v;
          best_out = static_cast<int>(a);
          best_in = j;
        }
      }
    }
    if (best_out < 0) break;
    current[best_out] = best_in;
    std::sort(current.begin(), current.end());
    value = best_value;
  }
  return current;
}

absl::StatusOr<SolveResult> GreedyCoverage(const CoverageInstance& instance,
                                           int k) {
  if (absl::Status s = instance.Validate(); !s.ok()) return s;
  if (k < 0) return absl::InvalidArgumentError("k must be nonnegative");
  if (k > instance.num_sets) {
    return absl::FailedPreconditionError(
        absl::StrCat("k=", k, " exceeds the ", instance.num_sets, " sets"));
  }
  const auto start = Clock::now();
  std::vector<char> covered(instance.num_elements, 0);
  auto gain = [&](int i) {
    double g = 0.0;
    for (int e : instance.sets[i]) {
      if (!covered[e]) g += instance.weights[e];
    }
    return g;
  };
  // (gain bound, -index, round in which the bound was computed)
  using Entry = std::tuple<double, int, int>;
  std::priority_queue<Entry> heap;
  for (int i = 0; i < instance.num_sets; ++i) heap.emplace(gain(i), -i, 0);
  std::vector<int> chosen;
  double total = 0.0;
  int evaluations = instance.num_sets;
  for (int round = 0; round < k && !heap.empty();) {
    auto [bound, neg_index, computed] = heap.top();
    heap.pop();
    if (computed == round) {
      const int i = -neg_index;
      chosen.push_back(i);
      total += bound;
      for (int e : instance.sets[i]) covered[e] = 1;
      ++round;
      continue;
    }
    heap.emplace(gain(-neg_index), neg_index, round);
    ++evaluations;
  }
  std::sort(chosen.begin(), chosen.end());
  SolveResult result;
  result.best = VertexSet::FromUnsorted(instance.num_sets, chosen);
  result.objective = total;
  result.time_ms = MillisecondsSince(start);
  result.iterations = evaluations;
  result.method = "greedy";
  return result;
}

absl::StatusOr<std::vector<int>> SampleFeasibleSet(const ConstraintSpec& spec,
                                                   int dimension, Rng& rng) {
  if (const auto* c = std::get_if<Cardinality>(&spec)) {
    if (c->k < 0 || c->k > dimension) {
      return absl::InvalidArgumentError("k outside [0, n]");
    }
    return rng.SampleWithoutReplacement(dimension, c->k);
  }
  if (const auto* p = std::get_if<PartitionMatroid>(&spec)) {
    std::vector<int> chosen;
    for (size_t b = 0; b < p->blocks.size(); ++b) {
      const auto& block = p->blocks[b];
      for (int j : rng.SampleWithoutReplacement(static_cast<int>(block.size()),
                                                p->budgets[b])) {
        chosen.push_back(block[j]);
      }
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
  }
  if (const auto* g = std::get_if<GraphicMatroid>(&spec)) {
    std::vector<double> weights(g->graph.num_edges());
    for (double& w : weights) w = 1.0 - rng.UniformDouble();
    return MaxSpanningForest(weights, g->graph).indices();
  }
  const Graph& graph = std::get<FractionalStableSet>(spec).graph;
  std::vector<int> order(graph.num_nodes);
  for (int i = 0; i < graph.num_nodes; ++i) order[i] = i;
  rng.Shuffle(order);
  std::vector<std::vector<int>> neighbors(graph.num_nodes);
  for (const auto& [u, v] : graph.edges) {
    neighbors[u].push_back(v);
    neighbors[v].push_back(u);
  }
  std::vector<char> blocked(graph.num_nodes, 0);
  std::vector<int> chosen;
  for (int i : order) {
    if (blocked[i]) continue;
    chosen.push_back(i);
    blocked[i] = 1;
    for (int j : neighbors[i]) blocked[j] = 1;
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

absl::StatusOr<SolveResult> RandomBaseline(const SetObjective& f,
                                           const ConstraintSpec& spec,
                                           int dimension,
                                           const RandomBudget& budget,
                                           uint64_t seed) {
  if (absl::Status s = ValidateConstraint(spec, dimension); !s.ok()) return s;
  const auto start = Clock::now();
  Rng rng(seed, 0, Purpose::kRandomBaseline);
  Incumbent incumbent;
  int64_t trials = 0;
  const int64_t limit = budget.seconds > 0.0 && budget.trials <= 0
                            ? INT64_MAX
                            : std::max<int64_t>(1, budget.trials);
  while (trials < limit) {
    if (budget.seconds > 0.0 && trials % 64 == 0 && trials > 0 &&
        MillisecondsSince(start) >= 1000.0 * budget.seconds) {
      break;
    }
    absl::StatusOr<std::vector<int>> set = SampleFeasibleSet(spec, dimension, rng);
    if (!set.ok()) return set.status();
    incumbent.Offer(VertexSet::FromUnsorted(dimension, *set), f.ValueOfSet(*set));
    ++trials;
  }
  SolveResult result;
  result.best = incumbent.vertex();
  result.objective = incumbent.value();
  result.time_ms = MillisecondsSince(start);
  result.iterations = static_cast<int>(trials);
  result.method = "random";
  result.seed = seed;
  return result;
}

absl::StatusOr<SolveResult> RandomPointDecompBaseline(
    const SetObjective& f, const ConstraintSpec& spec, int dimension,
    uint64_t seed) {
  if (absl::Status s = ValidateConstraint(spec, dimension); !s.ok()) return s;
  const auto start = Clock::now();
  Rng rng(seed, 0, Purpose::kRandomPoint);
  std::vector<double> z(dimension);
  for (double& v : z) v = 1.0 - rng.UniformDouble();  // (0, 1]
  absl::StatusOr<std::vector<double>> x = Parameterization(spec, dimension).Forward(z);
  if (!x.ok()) return x.status();
  absl::StatusOr<Decomposition> d = Decompose(*x, spec);
  if (!d.ok()) return d.status();
  absl::StatusOr<RoundedSet> rounded = BestSet(*d, f);
  if (!rounded.ok()) return rounded.status();
  SolveResult result;
  result.best = rounded->vertex;
  result.objective = rounded->value;
  result.extension = EvaluateExtension(*d, f);
  result.time_ms = MillisecondsSince(start);
  result.iterations = d->iterations;
  result.method = "random+decomp";
  result.seed = seed;
  result.point = *std::move(x);
  return result;
}

}  // namespace polydec
