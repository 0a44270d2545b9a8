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

#include "polydec/graph.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"

namespace polydec {

absl::StatusOr<Graph> MakeGraph(int num_nodes,
                                std::vector<std::pair<int, int>> edges,
                                std::vector<double> weights) {
  if (num_nodes < 0) return absl::InvalidArgumentError("negative node count");
  if (!weights.empty() && weights.size() != edges.size()) {
    return absl::InvalidArgumentError("one weight per edge required");
  }
  std::set<std::pair<int, int>> seen;
  for (size_t e = 0; e < edges.size(); ++e) {
    auto& [u, v] = edges[e];
    if (u < 0 || v < 0 || u >= num_nodes || v >= num_nodes) {
      return absl::OutOfRangeError(
          absl::StrCat("edge ", e, " endpoint outside [0, ", num_nodes, ")"));
    }
    if (u == v) {
      return absl::InvalidArgumentError(absl::StrCat("self-loop at node ", u));
    }
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second) {
      return absl::InvalidArgumentError(
          absl::StrCat("duplicate edge ", u, " ", v));
    }
    if (!weights.empty() && !(weights[e] > 0.0 && std::isfinite(weights[e]))) {
      return absl::InvalidArgumentError(
          absl::StrCat("edge ", e, " has nonpositive weight ", weights[e]));
    }
  }
  Graph graph;
  graph.num_nodes = num_nodes;
  graph.edges = std::move(edges);
  graph.weights = std::move(weights);
  return graph;
}

absl::StatusOr<Graph> ParseEdgeList(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int n = -1, m = -1;
  std::vector<std::pair<int, int>> edges;
  std::vector<double> weights;
  bool any_weight = false;
  while (std::getline(in, line)) {
    const size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    if (n < 0) {
      if (!(fields >> n)) continue;
      if (!(fields >> m) || n < 0 || m < 0) {
        return absl::InvalidArgumentError("edge list header must be \"n m\"");
      }
      continue;
    }
    int u, v;
    if (!(fields >> u)) continue;
    if (!(fields >> v)) {
      return absl::InvalidArgumentError(
          absl::StrCat("malformed edge line: ", line));
    }
    double w = 1.0;
    if (fields >> w) any_weight = true;
    edges.emplace_back(u, v);
    weights.push_back(w);
  }
  if (n < 0) return absl::InvalidArgumentError("missing edge list header");
  if (static_cast<int>(edges.size()) != m) {
    return absl::InvalidArgumentError(absl::StrCat(
        "header declares ", m, " edges but ", edges.size(), " were read"));
  }
  if (!any_weight) weights.clear();
  return MakeGraph(n, std::move(edges), std::move(weights));
}

absl::StatusOr<Graph> LoadEdgeList(const std::string& path) {
  std::ifstream in(path);
  if (!in) return absl::NotFoundError(absl::StrCat("cannot open ", path));
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseEdgeList(buffer.str());
}

std::string FormatEdgeList(const Graph& graph) {
  std::string out = absl::StrCat(graph.num_nodes, " ", graph.num_edges(), "\n");
  for (int e = 0; e < graph.num_edges(); ++e) {
    const auto [u, v] = graph.edges[e];
    if (graph.weights.empty()) {
      absl::StrAppend(&out, u, " ", v, "\n");
    } else {
      absl::StrAppendFormat(&out, "%d %d %.17g\n", u, v, graph.weights[e]);
    }
  }
  return out;
}

UnionFind::UnionFind(int n) : parent_(n), size_(n, 1), num_sets_(n) {
  std::iota(parent_.begin(), parent_.end(), 0);
}

int UnionFind::Find(int x) {
  int root = x;
  while (parent_[root] != root) root = parent_[root];
  while (parent_[x] != root) {
    const int next = parent_[x];
    parent_[x] = root;
    x = next;
  }
  return root;
}

bool UnionFind::Union(int a, int b) {
  a = Find(a);
  b = Find(b);
  if (a == b) return false;
  if (size_[a] < size_[b]) std::swap(a, b);
  parent_[b] = a;
  size_[a] += size_[b];
  --num_sets_;
  return true;
}

int CountComponents(const Graph& graph) {
  UnionFind uf(graph.num_nodes);
  for (const auto& [u, v] : graph.edges) uf.Union(u, v);
  return uf.num_sets();
}

int CountComponents(const Graph& graph, std::span<const int> edge_subset) {
  UnionFind uf(graph.num_nodes);
  for (int e : edge_subset) uf.Union(graph.edges[e].first, graph.edges[e].second);
  return uf.num_sets();
}

int GraphicRank(const Graph& graph, std::span<const int> edge_subset) {
  return graph.num_nodes - CountComponents(graph, edge_subset);
}

bool IsForest(const Graph& graph, std::span<const int> edge_subset) {
  UnionFind uf(graph.num_nodes);
  for (int e : edge_subset) {
    if (!uf.Union(graph.edges[e].first, graph.edges[e].second)) return false;
  }
  return true;
}

std::vector<int> MatroidComponents(const Graph& graph) {
  const int n = graph.num_nodes;
  const int m = graph.num_edges();
  // Spanning forest in edge order, then union every non-tree edge with the
  // tree edges on its fundamental cycle.
  UnionFind forest(n);
  std::vector<bool> in_tree(m, false);
  std::vector<std::vector<std::pair<int, int>>> adjacency(n);
  for (int e = 0; e < m; ++e) {
    const auto [u, v] = graph.edges[e];
    if (forest.Union(u, v)) {
      in_tree[e] = true;
      adjacency[u].push_back({v, e});
      adjacency[v].push_back({u, e});
    }
  }
  std::vector<int> parent(n, -1), parent_edge(n, -1), depth(n, -1);
  for (int root = 0; root < n; ++root) {
    if (depth[root] >= 0) continue;
    depth[root] = 0;
    std::vector<int> stack = {root};
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (const auto& [v, e] : adjacency[u]) {
        if (depth[v] >= 0) continue;
        depth[v] = depth[u] + 1;
        parent[v] = u;
        parent_edge[v] = e;
        stack.push_back(v);
      }
    }
  }
  UnionFind classes(m);
  for (int f = 0; f < m; ++f) {
    if (in_tree[f]) continue;
    auto [u, v] = graph.edges[f];
    while (u != v) {
      if (depth[u] < depth[v]) std::swap(u, v);
      classes.Union(f, parent_edge[u]);
      u = parent[u];
    }
  }
  std::vector<int> label(m, -1), root_label(m, -1);
  int next = 0;
  for (int e = 0; e < m; ++e) {
    const int root = classes.Find(e);
    if (root_label[root] < 0) root_label[root] = next++;
    label[e] = root_label[root];
  }
  return label;
}

Graph TriangleGraph() { return *MakeGraph(3, {{0, 1}, {0, 2}, {1, 2}}); }

Graph PathGraph(int num_nodes) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < num_nodes; ++i) edges.push_back({i, i + 1});
  return *MakeGraph(num_nodes, std::move(edges));
}

Graph CycleGraph(int num_nodes) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < num_nodes; ++i) edges.push_back({i, i + 1});
  if (num_nodes >= 3) edges.push_back({0, num_nodes - 1});
  return *MakeGraph(num_nodes, std::move(edges));
}

Graph StarGraph(int num_leaves) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= num_leaves; ++i) edges.push_back({0, i});
  return *MakeGraph(num_leaves + 1, std::move(edges));
}

Graph CompleteGraph(int num_nodes) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < num_nodes; ++u) {
    for (int v = u + 1; v < num_nodes; ++v) edges.push_back({u, v});
  }
  return *MakeGraph(num_nodes, std::move(edges));
}

}  // namespace polydec
