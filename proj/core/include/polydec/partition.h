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

// Partition matroid base polytope: x in [0,1]^n with sum_{e in V_i} x(e) = k_i
// for every block V_i.

#ifndef POLYDEC_PARTITION_H_
#define POLYDEC_PARTITION_H_

#include <span>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "polydec/constraint.h"
#include "polydec/decomposition.h"
#include "polydec/driver.h"
#include "polydec/vertex_set.h"

namespace polydec {

// Block-wise version of ProjectToHypersimplex.
absl::StatusOr<std::vector<double>> ProjectToPartitionPolytope(
    std::span<const double> z, const PartitionMatroid& spec);

std::vector<double> ProjectToPartitionPolytopeVjp(
    std::span<const double> z, const PartitionMatroid& spec,
    std::span<const double> x_bar);

// Union of the per-block top-k_i sets (ties to the smaller index).
absl::StatusOr<VertexSet> PartitionVertex(std::span<const double> x,
                                          const PartitionMatroid& spec);

absl::Status CheckInPartitionPolytope(std::span<const double> x,
                                      const PartitionMatroid& spec);

class PartitionFamily : public PolytopeFamily {
 public:
  explicit PartitionFamily(const PartitionMatroid& spec) : spec_(spec) {}

  int dimension() const override { return spec_.dimension(); }
  absl::StatusOr<VertexSet> Vertex(std::span<const double> x) const override;
  absl::StatusOr<StepCoefficient> MaxStep(
      std::span<const double> x, const VertexSet& vertex) const override;

 private:
  const PartitionMatroid& spec_;
};

absl::StatusOr<Decomposition> DecomposePartition(
    std::span<const double> x, const PartitionMatroid& spec,
    const DecompositionConfig& config = {});

absl::StatusOr<TapedDecomposition> DecomposePartitionWithTape(
    std::span<const double> x, const PartitionMatroid& spec,
    const DecompositionConfig& config = {});

}  // namespace polydec

#endif  // POLYDEC_PARTITION_H_
