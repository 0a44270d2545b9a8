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

#ifndef POLYDEC_VERTEX_SET_H_
#define POLYDEC_VERTEX_SET_H_

#include <span>
#include <string>
#include <vector>

#include "absl/status/statusor.h"

namespace polydec {

// A vertex of a feasible-set polytope. Integral vertices are stored as a
// sorted, strictly increasing list of 0-based indices. Half-integral vertices
// (produced only by the fractional stable set family) store the dense value
// of every coordinate, each in {0, 1/2, 1}.
class VertexSet {
 public:
  VertexSet() = default;

  // Validates that `indices` is strictly increasing and below `dimension`.
  static absl::StatusOr<VertexSet> Integral(int dimension,
                                            std::vector<int> indices);
  // Sorts and deduplicates; CHECK-style precondition that indices are valid.
  static VertexSet FromUnsorted(int dimension, std::vector<int> indices);
  // Values must be in {0, 1/2, 1}. If no coordinate equals 1/2 the result is
  // stored as an integral vertex.
  static absl::StatusOr<VertexSet> HalfIntegral(std::vector<double> values);

  int dimension() const { return dimension_; }
  bool is_integral() const { return half_values_.empty(); }

  // Valid only for integral vertices.
  const std::vector<int>& indices() const { return indices_; }
  // Valid only for half-integral vertices.
  const std::vector<double>& half_values() const { return half_values_; }

  double value(int i) const;
  std::vector<double> ToDense() const;
  // Adds weight * this to `out`.
  void AddScaledTo(double weight, std::span<double> out) const;
  bool Contains(int i) const;
  int size() const { return static_cast<int>(indices_.size()); }

  std::string DebugString() const;

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.dimension_ == b.dimension_ && a.indices_ == b.indices_ &&
           a.half_values_ == b.half_values_;
  }

 private:
  int dimension_ = 0;
  std::vector<int> indices_;
  std::vector<double> half_values_;
};

}  // namespace polydec

#endif  // POLYDEC_VERTEX_SET_H_
