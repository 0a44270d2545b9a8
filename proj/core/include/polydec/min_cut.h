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

#ifndef POLYDEC_MIN_CUT_H_
#define POLYDEC_MIN_CUT_H_

#include <vector>

namespace polydec {

// Dinic's algorithm on real capacities.
class MaxFlow {
 public:
  explicit MaxFlow(int num_nodes);

  void AddEdge(int from, int to, double capacity);
  double Solve(int source, int sink);

  // After Solve: true when `node` is reachable from the source in the
  // residual graph.
  bool OnSourceSide(int node) const { return level_[node] >= 0; }

 private:
  struct Arc {
    int to;
    int reverse;
    double capacity;
  };

  bool BuildLevels(int source, int sink);
  double Augment(int node, int sink, double limit);

  std::vector<std::vector<Arc>> arcs_;
  std::vector<int> level_;
  std::vector<size_t> next_arc_;
};

}  // namespace polydec

#endif  // POLYDEC_MIN_CUT_H_
