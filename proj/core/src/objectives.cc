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

#include "polydec/objectives.h"

#include <algorithm>
#include <functional>

#include "absl/strings/str_cat.h"

namespace polydec {
namespace {

// C(n, k), saturating at `limit` + 1.
int64_t BoundedBinomial(int n, int k, int64_t limit) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long double value = 1;
  for (int i = 1; i <= k; ++i) {
    value = value * (n - k + i) / i;
    if (value > limit) return limit + 1;
  }
  return static_cast<int64_t>(value + 0.5);
}

class Incumbent {
 public:
  explicit Incumbent(const SetObjective& f) : f_(f) {}

  void Consider(const std::vector<int>& set) {
    ++evaluated_;
    std::vector<int> sorted = set;
    std::sort(sorted.begin(), sorted.end());
    const double value = f_.ValueOfSet(sorted);
    if (!found_ || value > value_ || (value == value_ && sorted < set_)) {
      found_ = true;
      value_ = value;
      set_ = std::move(sorted);
    }
  }

  Optimum Result(int dimension) const {
    return {VertexSet::FromUnsorted(dimension, set_), value_, evaluated_};
  }
  bool found() const { return found_; }

 private:
  const SetObjective& f_;
  bool found_ = false;
  double value_ = 0.0;
  std::vector<int> set_;
  int64_t evaluated_ = 0;
};

// Calls visit(chosen) for every k-subset of `pool`, in lexicographic order.
void ForEachCombination(const std::vector<int>& pool, int k,
                        const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> chosen;
  std::function<void(int)> recurse = [&](int start) {
    if (static_cast<int>(chosen.size()) == k) {
      visit(chosen);
      return;
    }
    const int need = k - static_cast<int>(chosen.size());
    for (int i = start; i + need <= static_cast<int>(pool.size()); ++i) {
      chosen.push_back(pool[i]);
      recurse(i + 1);
      chosen.pop_back();
    }
  };
  recurse(0);
}

absl::Status CapError(int64_t count, int64_t cap) {
  return absl::ResourceExhaustedError(absl::StrCat(
      "enumeration of ", count > cap ? "more than " : "", cap,
      " feasible sets exceeds the cap"));
}

}  // namespace

absl::Status CoverageInstance::Validate() const {
  if (num_sets < 0 || num_elements < 0) {
    return absl::InvalidArgumentError("negative sizes");
  }
  if (static_cast<int>(weights.size()) != num_elements) {
    return absl::InvalidArgumentError(absl::StrCat(
        weights.size(), " weights for ", num_elements, " elements"));
  }
  if (static_cast<int>(sets.size()) != num_sets) {
    return absl::InvalidArgumentError(
        absl::StrCat(sets.size(), " sets listed, expected ", num_sets));
  }
  for (double w : weights) {
    if (!(w >= 0.0)) return absl::InvalidArgumentError("negative weight");
  }
  for (int i = 0; i < num_sets; ++i) {
    for (size_t j = 0; j < sets[i].size(); ++j) {
      const int e = sets[i][j];
      if (e < 0 || e >= num_elements) {
        return absl::OutOfRangeError(
            absl::StrCat("set ", i, " lists element ", e));
      }
      if (j > 0 && sets[i][j - 1] >= e) {
        return absl::InvalidArgumentError(
            absl::StrCat("set ", i, " is not strictly increasing"));
      }
    }
  }
  return absl::OkStatus();
}

absl::StatusOr<double> CoverageValue(const CoverageInstance& instance,
                                     std::span<const int> chosen) {
  for (int i : chosen) {
    if (i < 0 || i >= instance.num_sets) {
      return absl::OutOfRangeError(absl::StrCat("set index ", i));
    }
  }
  std::vector<char> covered(instance.num_elements, 0);
  double total = 0.0;
  for (int i : chosen) {
    for (int e : instance.sets[i]) {
      if (!covered[e]) {
        covered[e] = 1;
        total += instance.weights[e];
      }
    }
  }
  return total;
}

CoverageObjective::CoverageObjective(const CoverageInstance& instance)
    : instance_(instance) {}

double CoverageObjective::ValueOfSet(std::span<const int> set) const {
  absl::StatusOr<double> value = CoverageValue(instance_, set);
  return value.ok() ? *value : 0.0;
}

double CutValue(const Graph& graph, std::span<const int> nodes) {
  std::vector<char> inside(graph.num_nodes, 0);
  for (int v : nodes) inside[v] = 1;
  double total = 0.0;
  for (int e = 0; e < graph.num_edges(); ++e) {
    const auto [u, v] = graph.edges[e];
    if (inside[u] != inside[v]) total += graph.weight(e);
  }
  return total;
}

double LinearObjective::ValueOfSet(std::span<const int> set) const {
  double total = 0.0;
  for (int i : set) total += coefficients_[i];
  return total;
}

double LinearObjective::ValueOfHalfIntegral(const VertexSet& vertex) const {
  double total = 0.0;
  for (size_t i = 0; i < coefficients_.size(); ++i) {
    total += coefficients_[i] * vertex.value(static_cast<int>(i));
  }
  return total;
}

absl::StatusOr<Optimum> BruteForceOptimum(const SetObjective& f,
                                          const ConstraintSpec& spec,
                                          int dimension, int64_t cap) {
  if (absl::Status s = ValidateConstraint(spec, dimension); !s.ok()) return s;
  Incumbent best(f);
  auto visit = [&best](const std::vector<int>& set) { best.Consider(set); };

  if (const auto* c = std::get_if<Cardinality>(&spec)) {
    const int64_t count = BoundedBinomial(dimension, c->k, cap);
    if (count > cap) return CapError(count, cap);
    std::vector<int> pool(dimension);
    for (int i = 0; i < dimension; ++i) pool[i] = i;
    ForEachCombination(pool, c->k, visit);
  } else if (const auto* p = std::get_if<PartitionMatroid>(&spec)) {
    int64_t count = 1;
    for (size_t b = 0; b < p->blocks.size(); ++b) {
      count *= BoundedBinomial(static_cast<int>(p->blocks[b].size()),
                               p->budgets[b], cap);
      if (count > cap) return CapError(count, cap);
    }
    std::vector<int> chosen;
    std::function<void(size_t)> per_block = [&](size_t b) {
      if (b == p->blocks.size()) {
        best.Consider(chosen);
        return;
      }
      std::vector<int> pool = p->blocks[b];
      std::sort(pool.begin(), pool.end());
      ForEachCombination(pool, p->budgets[b], [&](const std::vector<int>& s) {
        chosen.insert(chosen.end(), s.begin(), s.end());
        per_block(b + 1);
        chosen.resize(chosen.size() - s.size());
      });
    };
    per_block(0);
  } else if (const auto* g = std::get_if<GraphicMatroid>(&spec)) {
    const Graph& graph = g->graph;
    const int rank = graph.num_nodes - CountComponents(graph);
    const int64_t count = BoundedBinomial(graph.num_edges(), rank, cap);
    if (count > cap) return CapError(count, cap);
    std::vector<int> pool(graph.num_edges());
    for (int e = 0; e < graph.num_edges(); ++e) pool[e] = e;
    ForEachCombination(pool, rank, [&](const std::vector<int>& s) {
      if (IsForest(graph, s)) best.Consider(s);
    });
  } else {
    const Graph& graph = std::get<FractionalStableSet>(spec).graph;
    std::vector<std::vector<int>> neighbors(graph.num_nodes);
    for (const auto& [u, v] : graph.edges) {
      neighbors[u].push_back(v);
      neighbors[v].push_back(u);
    }
    std::vector<int> blocked(graph.num_nodes, 0);
    std::vector<int> chosen;
    int64_t visited = 0;
    bool exceeded = false;
    std::function<void(int)> recurse = [&](int i) {
      if (exceeded) return;
      if (i == graph.num_nodes) {
        if (++visited > cap) {
          exceeded = true;
          return;
        }
        best.Consider(chosen);
        return;
      }
      if (!blocked[i]) {
        chosen.push_back(i);
        for (int j : neighbors[i]) ++blocked[j];
        recurse(i + 1);
        for (int j : neighbors[i]) --blocked[j];
        chosen.pop_back();
      }
      recurse(i + 1);
    };
    recurse(0);
    if (exceeded) return CapError(cap + 1, cap);
  }
  if (!best.found()) {
    return absl::NotFoundError("constraint admits no feasible set");
  }
  return best.Result(dimension);
}

}  // namespace polydec
