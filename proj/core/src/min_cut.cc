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

#include "polydec/min_cut.h"

#include <algorithm>
#include <limits>
#include <queue>

namespace polydec {
namespace {

constexpr double kResidualEpsilon = 1e-12;

}  // namespace

MaxFlow::MaxFlow(int num_nodes)
    : arcs_(num_nodes), level_(num_nodes, -1), next_arc_(num_nodes, 0) {}

void MaxFlow::AddEdge(int from, int to, double capacity) {
  arcs_[from].push_back({to, static_cast<int>(arcs_[to].size()), capacity});
  arcs_[to].push_back({from, static_cast<int>(arcs_[from].size()) - 1, 0.0});
}

bool MaxFlow::BuildLevels(int source, int sink) {
  std::fill(level_.begin(), level_.end(), -1);
  std::queue<int> frontier;
  level_[source] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    const int u = frontier.front();
    frontier.pop();
    for (const Arc& arc : arcs_[u]) {
      if (arc.capacity > kResidualEpsilon && level_[arc.to] < 0) {
        level_[arc.to] = level_[u] + 1;
        frontier.push(arc.to);
      }
    }
  }
  return level_[sink] >= 0;
}

double MaxFlow::Augment(int node, int sink, double limit) {
  if (node == sink) return limit;
  for (size_t& i = next_arc_[node]; i < arcs_[node].size(); ++i) {
    Arc& arc = arcs_[node][i];
    if (arc.capacity <= kResidualEpsilon || level_[arc.to] != level_[node] + 1) {
      continue;
    }
    const double pushed =
        Augment(arc.to, sink, std::min(limit, arc.capacity));
    if (pushed > 0.0) {
      arc.capacity -= pushed;
      arcs_[arc.to][arc.reverse].capacity += pushed;
      return pushed;
    }
  }
  return 0.0;
}

double MaxFlow::Solve(int source, int sink) {
  double total = 0.0;
  while (BuildLevels(source, sink)) {
    std::fill(next_arc_.begin(), next_arc_.end(), 0);
    while (true) {
      const double pushed =
          Augment(source, sink, std::numeric_limits<double>::infinity());
      if (pushed <= 0.0) break;
      total += pushed;
    }
  }
  return total;
}

}  // namespace polydec
