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

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include "polydec/constraint.h"
#include "polydec/decomposition.h"
#include "polydec/driver.h"
#include "polydec/extension.h"
#include "polydec/hypersimplex.h"
#include "polydec/vertex_set.h"
#include "test_util.h"

namespace polydec {
namespace {

using ::testing::ElementsAre;
using ::testing::DoubleNear;

VertexSet Set(int n, std::vector<int> indices) {
  return *VertexSet::Integral(n, std::move(indices));
}

TEST(VertexSetTest, RejectsUnsortedAndOutOfRange) {
  EXPECT_FALSE(VertexSet::Integral(3, {1, 0}).ok());
  EXPECT_FALSE(VertexSet::Integral(3, {0, 0}).ok());
  EXPECT_FALSE(VertexSet::Integral(3, {3}).ok());
  EXPECT_TRUE(VertexSet::Integral(3, {}).ok());
}

TEST(VertexSetTest, HalfIntegralWithoutHalvesBecomesIntegral) {
  VertexSet v = *VertexSet::HalfIntegral({1.0, 0.0, 1.0});
  EXPECT_TRUE(v.is_integral());
  EXPECT_THAT(v.indices(), ElementsAre(0, 2));
  EXPECT_FALSE(VertexSet::HalfIntegral({0.3}).ok());
  EXPECT_FALSE(VertexSet::HalfIntegral({0.5, 0.5}).value().is_integral());
}

TEST(ReconstructTest, SingleVertex) {
  auto x = Reconstruct(std::vector<DecompositionPair>{{1.0, Set(4, {0, 2})}}, 4);
  ASSERT_TRUE(x.ok());
  EXPECT_THAT(*x, ElementsAre(1, 0, 1, 0));
}

TEST(ReconstructTest, WeightedSum) {
  std::vector<DecompositionPair> pairs = {
      {0.5, Set(3, {0})}, {0.3, Set(3, {1})}, {0.2, Set(3, {2})}};
  auto x = Reconstruct(pairs, 3);
  ASSERT_TRUE(x.ok());
  EXPECT_THAT(*x, ElementsAre(DoubleNear(0.5, 1e-15), DoubleNear(0.3, 1e-15),
                              DoubleNear(0.2, 1e-15)));
}

TEST(ReconstructTest, EmptyIsZero) {
  auto x = Reconstruct({}, 3);
  ASSERT_TRUE(x.ok());
  EXPECT_THAT(*x, ElementsAre(0, 0, 0));
}

TEST(ReconstructTest, HalfIntegralContributesFractions) {
  std::vector<DecompositionPair> pairs = {
      {0.5, *VertexSet::HalfIntegral({0.5, 0.5, 0.0})}, {0.5, Set(3, {2})}};
  auto x = Reconstruct(pairs, 3);
  ASSERT_TRUE(x.ok());
  EXPECT_THAT(*x, ElementsAre(0.25, 0.25, 0.5));
}

TEST(ReconstructTest, DimensionMismatchIsAnError) {
  EXPECT_FALSE(Reconstruct(std::vector<DecompositionPair>{{1.0, Set(4, {0})}}, 3).ok());
}

TEST(ValidateDecompositionTest, ExactHypersimplexDecompositionPasses) {
  std::vector<double> x = {0.7, 0.6, 0.4, 0.3};
  auto d = Decompose(x, Cardinality{2});
  ASSERT_TRUE(d.ok());
  DecompositionReport report = ValidateDecomposition(*d, Cardinality{2}, x);
  EXPECT_TRUE(report.ExactPasses(1e-9)) << report.DebugString();
  EXPECT_LE(report.iterations, 4);
}

TEST(ValidateDecompositionTest, FlagsWrongCardinality) {
  std::vector<double> x = {0.5, 0.5, 0.5, 0.5};
  Decomposition d;
  d.pairs = {{0.5, Set(4, {0, 1})}, {0.5, Set(4, {1, 2, 3})}};
  d.iterations = 2;
  DecompositionReport report = ValidateDecomposition(d, Cardinality{2}, x);
  EXPECT_THAT(report.infeasible_pairs, ElementsAre(1));
  EXPECT_FALSE(report.ExactPasses(1e-9));
}

TEST(ValidateDecompositionTest, RescaledResidualReported) {
  std::vector<double> x = {0.7, 0.6, 0.4, 0.3};
  DecompositionConfig config;
  config.scale = 0.5;
  config.floor = 0.0;
  config.tolerance = 1e-6;
  config.max_iterations = 10000;
  auto d = Decompose(x, Cardinality{2}, config);
  ASSERT_TRUE(d.ok());
  DecompositionReport report = ValidateDecomposition(*d, Cardinality{2}, x);
  EXPECT_LE(report.reconstruction_error, 1e-6);
  EXPECT_TRUE(report.infeasible_pairs.empty());
  EXPECT_LE(d->ProbabilitySum(), 1.0 + 1e-12);
  EXPECT_GE(d->ProbabilitySum(), 1.0 - 1e-5);
}

TEST(DecompositionConfigTest, Validation) {
  DecompositionConfig c;
  EXPECT_TRUE(ValidateConfig(c).ok());
  EXPECT_TRUE(c.exact());
  c.scale = 0.0;
  EXPECT_FALSE(ValidateConfig(c).ok());
  c.scale = 0.5;
  c.floor = 1.0;
  EXPECT_FALSE(ValidateConfig(c).ok());
  c.floor = 0.1;
  c.tolerance = 0.0;
  EXPECT_FALSE(ValidateConfig(c).ok());
}

TEST(RescaledCoefficientTest, FloorRule) {
  DecompositionConfig c;
  c.scale = 0.5;
  c.floor = 0.1;
  double multiplier = 0.0;
  EXPECT_DOUBLE_EQ(RescaledCoefficient(0.6, c, &multiplier), 0.3);
  EXPECT_DOUBLE_EQ(multiplier, 0.5);
  // b * a below the floor: the unscaled coefficient is used.
  EXPECT_DOUBLE_EQ(RescaledCoefficient(0.1, c, &multiplier), 0.1);
  EXPECT_DOUBLE_EQ(multiplier, 1.0);
}

TEST(ConstraintTest, ValidateSpecs) {
  EXPECT_TRUE(ValidateConstraint(Cardinality{2}, 4).ok());
  EXPECT_EQ(ValidateConstraint(Cardinality{5}, 4).code(),
            absl::StatusCode::kFailedPrecondition);
  PartitionMatroid p{{{0, 1}, {2}}, {1, 1}};
  EXPECT_TRUE(ValidateConstraint(p, 3).ok());
  EXPECT_FALSE(ValidateConstraint(p, 4).ok());  // element 3 uncovered
  PartitionMatroid overlap{{{0, 1}, {1, 2}}, {1, 1}};
  EXPECT_FALSE(ValidateConstraint(overlap, 3).ok());
  EXPECT_TRUE(ValidateConstraint(GraphicMatroid{TriangleGraph()}, 3).ok());
  EXPECT_FALSE(ValidateConstraint(GraphicMatroid{TriangleGraph()}, 4).ok());
}

TEST(ConstraintTest, FeasibleVertices) {
  EXPECT_TRUE(IsFeasibleVertex(Cardinality{2}, Set(4, {1, 3})));
  EXPECT_FALSE(IsFeasibleVertex(Cardinality{2}, Set(4, {1})));
  PartitionMatroid p{{{0, 1}, {2, 3}}, {1, 1}};
  EXPECT_TRUE(IsFeasibleVertex(p, Set(4, {0, 3})));
  EXPECT_FALSE(IsFeasibleVertex(p, Set(4, {0, 1})));
  EXPECT_TRUE(IsFeasibleVertex(GraphicMatroid{TriangleGraph()}, Set(3, {0, 2})));
  EXPECT_FALSE(IsFeasibleVertex(GraphicMatroid{TriangleGraph()}, Set(3, {0, 1, 2})));
  FractionalStableSet s{PathGraph(3), 0.0};
  EXPECT_TRUE(IsFeasibleVertex(s, Set(3, {0, 2})));
  EXPECT_FALSE(IsFeasibleVertex(s, Set(3, {0, 1})));
  FractionalStableSet triangle{TriangleGraph(), 0.0};
  EXPECT_TRUE(IsFeasibleVertex(triangle, *VertexSet::HalfIntegral({0.5, 0.5, 0.5})));
}

// Decompositions are pure functions of the input.
TEST(DeterminismTest, IdenticalInputsGiveIdenticalPairs) {
  Rng rng(1, 0, Purpose::kTest);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = static_cast<int>(rng.UniformInt(3, 30));
    const int k = static_cast<int>(rng.UniformInt(1, n - 1));
    std::vector<double> x = testing::RandomHypersimplexPoint(n, k, rng);
    auto a = Decompose(x, Cardinality{k});
    auto b = Decompose(x, Cardinality{k});
    ASSERT_TRUE(a.ok() && b.ok());
    ASSERT_EQ(a->pairs.size(), b->pairs.size());
    for (size_t t = 0; t < a->pairs.size(); ++t) {
      EXPECT_EQ(a->pairs[t].probability, b->pairs[t].probability);
      EXPECT_EQ(a->pairs[t].vertex, b->pairs[t].vertex);
    }
  }
}

}  // namespace
}  // namespace polydec
