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

#include "polydec/vertex_set.h"

#include <algorithm>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"

namespace polydec {

absl::StatusOr<VertexSet> VertexSet::Integral(int dimension,
                                              std::vector<int> indices) {
  if (dimension < 0) return absl::InvalidArgumentError("negative dimension");
  for (size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] < 0 || indices[i] >= dimension) {
      return absl::OutOfRangeError(
          absl::StrCat("vertex index ", indices[i], " outside [0, ",
                       dimension, ")"));
    }
    if (i > 0 && indices[i] <= indices[i - 1]) {
      return absl::InvalidArgumentError(
          "vertex indices must be strictly increasing");
    }
  }
  VertexSet v;
  v.dimension_ = dimension;
  v.indices_ = std::move(indices);
  return v;
}

VertexSet VertexSet::FromUnsorted(int dimension, std::vector<int> indices) {
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  VertexSet v;
  v.dimension_ = dimension;
  v.indices_ = std::move(indices);
  return v;
}

absl::StatusOr<VertexSet> VertexSet::HalfIntegral(std::vector<double> values) {
  bool has_half = false;
  std::vector<int> ones;
  for (int i = 0; i < static_cast<int>(values.size()); ++i) {
    const double v = values[i];
    if (v == 0.5) {
      has_half = true;
    } else if (v == 1.0) {
      ones.push_back(i);
    } else if (v != 0.0) {
      return absl::InvalidArgumentError(
          absl::StrCat("half-integral vertex value ", v, " at ", i,
                       " not in {0, 1/2, 1}"));
    }
  }
  VertexSet out;
  out.dimension_ = static_cast<int>(values.size());
  if (has_half) {
    out.half_values_ = std::move(values);
  } else {
    out.indices_ = std::move(ones);
  }
  return out;
}

double VertexSet::value(int i) const {
  if (!is_integral()) return half_values_[i];
  return Contains(i) ? 1.0 : 0.0;
}

bool VertexSet::Contains(int i) const {
  if (!is_integral()) return half_values_[i] == 1.0;
  return std::binary_search(indices_.begin(), indices_.end(), i);
}

std::vector<double> VertexSet::ToDense() const {
  if (!is_integral()) return half_values_;
  std::vector<double> dense(dimension_, 0.0);
  for (int i : indices_) dense[i] = 1.0;
  return dense;
}

void VertexSet::AddScaledTo(double weight, std::span<double> out) const {
  if (is_integral()) {
    for (int i : indices_) out[i] += weight;
    return;
  }
  for (int i = 0; i < dimension_; ++i) out[i] += weight * half_values_[i];
}

std::string VertexSet::DebugString() const {
  if (is_integral()) return absl::StrCat("{", absl::StrJoin(indices_, ","), "}");
  return absl::StrCat("half(", absl::StrJoin(half_values_, ","), ")");
}

}  // namespace polydec
