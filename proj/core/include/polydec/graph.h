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

#ifndef POLYDEC_GRAPH_H_
#define POLYDEC_GRAPH_H_

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"

namespace polydec {

// Simple undirected graph. Edges are stored with u < v in input order; edge
// indices are positions in `edges`.
struct Graph {
  int num_nodes = 0;
  std::vector<std::pair<int, int>> edges;
  // Empty, or one positive weight per edge.
  std::vector<double> weights;

  int num_edges() const { return static_cast<int>(edges.size()); }
  double weight(int e) const { return weights.empty() ? 1.0 : weights[e]; }
};

// Normalizes endpoint order and rejects self-loops, duplicates, bad weights.
absl::StatusOr<Graph> MakeGraph(int num_nodes,
                                std::vector<std::pair<int, int>> edges,
                                std::vector<double> weights = {});

// Text edge list: header "n m", then m lines "u v [w]".
absl::StatusOr<Graph> ParseEdgeList(std::string_view text);
absl::StatusOr<Graph> LoadEdgeList(const std::string& path);
std::string FormatEdgeList(const Graph& graph);

// Path-compressed, union-by-size disjoint sets.
class UnionFind {
 public:
  explicit UnionFind(int n);
  int Find(int x);
  // Returns false when a and b were already joined.
  bool Union(int a, int b);
  int num_sets() const { return num_sets_; }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  int num_sets_;
};

int CountComponents(const Graph& graph);
// Number of connected components of (V, F), isolated nodes included.
int CountComponents(const Graph& graph, std::span<const int> edge_subset);
// r(F) = n - c(V, F).
int GraphicRank(const Graph& graph, std::span<const int> edge_subset);
bool IsForest(const Graph& graph, std::span<const int> edge_subset);

// Partition of the edges into connected components of the graphic matroid
// (2-connected blocks; each bridge is its own class). Returned as a class id
// per edge, ids numbered by first appearance.
std::vector<int> MatroidComponents(const Graph& graph);

Graph TriangleGraph();
Graph PathGraph(int num_nodes);
Graph CycleGraph(int num_nodes);
Graph StarGraph(int num_leaves);
Graph CompleteGraph(int num_nodes);

}  // namespace polydec

#endif  // POLYDEC_GRAPH_H_
