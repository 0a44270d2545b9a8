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

#ifndef POLYDEC_OBJECTIVES_H_
#define POLYDEC_OBJECTIVES_H_

#include <cstdint>
#include <span>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "polydec/constraint.h"
#include "polydec/extension.h"
#include "polydec/graph.h"
#include "polydec/vertex_set.h"

namespace polydec {

// Weighted maximum coverage: set i covers the elements sets[i].
struct CoverageInstance {
  int num_sets = 0;
  int num_elements = 0;
  std::vector<double> weights;          // per element
  std::vector<std::vector<int>> sets;   // sorted element lists

  absl::Status Validate() const;
};

// Total weight of elements covered by at least one chosen set.
absl::StatusOr<double> CoverageValue(const CoverageInstance& instance,
                                     std::span<const int> chosen);

class CoverageObjective : public SetObjective {
 public:
  // `instance` must outlive the objective.
  explicit CoverageObjective(const CoverageInstance& instance);
  double ValueOfSet(std::span<const int> set) const override;

 private:
  const CoverageInstance& instance_;
};

// Total weight of edges with exactly one endpoint in `nodes`.
double CutValue(const Graph& graph, std::span<const int> nodes);

class CutObjective : public SetObjective {
 public:
  explicit CutObjective(const Graph& graph) : graph_(graph) {}
  double ValueOfSet(std::span<const int> set) const override {
    return CutValue(graph_, set);
  }

 private:
  const Graph& graph_;
};

// f(S) = sum_{i in S} c_i. Half-integral vertices score c . v, so the
// extension is exactly linear for every family.
class LinearObjective : public SetObjective {
 public:
  explicit LinearObjective(std::vector<double> coefficients)
      : coefficients_(std::move(coefficients)) {}
  double ValueOfSet(std::span<const int> set) const override;
  double ValueOfHalfIntegral(const VertexSet& vertex) const override;
  const std::vector<double>& coefficients() const { return coefficients_; }

 private:
  std::vector<double> coefficients_;
};

struct Optimum {
  VertexSet vertex;
  double value = 0.0;
  int64_t evaluated = 0;
};

inline constexpr int64_t kEnumerationCap = 1000000;

// Exact maximizer of f over the feasible sets of `spec` in dimension n, by
// enumeration; ties go to the lexicographically smallest set. For the stable
// set family the feasible sets are the independent sets.
absl::StatusOr<Optimum> BruteForceOptimum(const SetObjective& f,
                                          const ConstraintSpec& spec,
                                          int dimension,
                                          int64_t cap = kEnumerationCap);

}  // namespace polydec

#endif  // POLYDEC_OBJECTIVES_H_
