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

#include "polydec/extension.h"

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "polydec/fstab.h"
#include "polydec/graphic.h"
#include "polydec/hypersimplex.h"
#include "polydec/objectives.h"
#include "polydec/rng.h"
#include "test_util.h"

namespace polydec {
namespace {

using ::testing::ElementsAre;

VertexSet Set(int n, std::vector<int> indices) {
  return *VertexSet::Integral(n, std::move(indices));
}

Decomposition SimplexDecomposition() {
  Decomposition d;
  d.pairs = {{0.5, Set(3, {0})}, {0.3, Set(3, {1})}, {0.2, Set(3, {2})}};
  d.iterations = 3;
  return d;
}

double Contains0(std::span<const int> s) {
  return std::find(s.begin(), s.end(), 0) != s.end() ? 1.0 : 0.0;
}

TEST(DecomposeWithTapeTest, CardinalityTrace) {
  auto taped = DecomposeWithTape(std::vector<double>{0.5, 0.3, 0.2}, Cardinality{1});
  ASSERT_TRUE(taped.ok());
  ASSERT_EQ(taped->tape.steps.size(), 3u);
  EXPECT_EQ(taped->tape.steps[0].binding.kind, BindingKind::kMinInSet);
  EXPECT_EQ(taped->tape.steps[0].binding.index, 0);
  EXPECT_TRUE(taped->tape.steps[2].terminal);
}

TEST(DecomposeWithTapeTest, VertexIsSingleStep) {
  auto taped = DecomposeWithTape(std::vector<double>{0, 1, 1}, Cardinality{2});
  ASSERT_TRUE(taped.ok());
  ASSERT_EQ(taped->tape.steps.size(), 1u);
  EXPECT_EQ(taped->tape.steps[0].coefficient, 1.0);
}

TEST(DecomposeWithTapeTest, ReplayReproducesProbabilities) {
  Rng rng(30, 0, Purpose::kTest);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = static_cast<int>(rng.UniformInt(2, 20));
    const int k = static_cast<int>(rng.UniformInt(1, n - 1));
    auto taped = DecomposeWithTape(testing::RandomHypersimplexPoint(n, k, rng), Cardinality{k});
    ASSERT_TRUE(taped.ok());
    std::vector<double> replay = ReplayProbabilities(taped->tape);
    ASSERT_EQ(replay.size(), taped->decomposition.pairs.size());
    for (size_t t = 0; t < replay.size(); ++t) {
      EXPECT_NEAR(replay[t], taped->decomposition.pairs[t].probability, 1e-12);
    }
  }
}

TEST(DecomposeWithTapeTest, MatchesFamilyDecomposition) {
  auto a = DecomposeWithTape(std::vector<double>{2.0 / 3, 2.0 / 3, 2.0 / 3},
                             GraphicMatroid{TriangleGraph()});
  auto b = DecomposeGraphic(std::vector<double>{2.0 / 3, 2.0 / 3, 2.0 / 3}, TriangleGraph());
  ASSERT_TRUE(a.ok() && b.ok());
  ASSERT_EQ(a->decomposition.pairs.size(), b->pairs.size());
  for (size_t t = 0; t < b->pairs.size(); ++t) {
    EXPECT_EQ(a->decomposition.pairs[t].probability, b->pairs[t].probability);
    EXPECT_EQ(a->decomposition.pairs[t].vertex, b->pairs[t].vertex);
  }
}

TEST(EvaluateExtensionTest, Examples) {
  FunctionObjective f(Contains0);
  EXPECT_DOUBLE_EQ(EvaluateExtension(SimplexDecomposition(), f), 0.5);
  Decomposition single;
  single.pairs = {{1.0, Set(3, {0, 2})}};
  EXPECT_DOUBLE_EQ(EvaluateExtension(single, f), 1.0);
}

TEST(EvaluateExtensionTest, HalfIntegralUsesPolicy) {
  Decomposition d;
  d.pairs = {{0.5, *VertexSet::HalfIntegral({0.5, 0.5, 0.5})}, {0.5, Set(3, {0})}};
  FunctionObjective f([](std::span<const int> s) { return 1.0 + s.size(); });
  EXPECT_DOUBLE_EQ(EvaluateExtension(d, f), 1.0);
  LinearObjective linear({1.0, 2.0, 3.0});
  EXPECT_DOUBLE_EQ(EvaluateExtension(d, linear), 0.5 * 3.0 + 0.5 * 1.0);
}

TEST(EvaluateExtensionTest, LinearObjectiveIsExactForAllFamilies) {
  Rng rng(31, 0, Purpose::kTest);
  for (int trial = 0; trial < 200; ++trial) {
    ConstraintSpec spec;
    std::vector<double> x;
    switch (trial % 4) {
      case 0: {
        const int n = static_cast<int>(rng.UniformInt(2, 20));
        const int k = static_cast<int>(rng.UniformInt(1, n - 1));
        spec = Cardinality{k};
        x = testing::RandomHypersimplexPoint(n, k, rng);
        break;
      }
      case 1: {
        PartitionMatroid p = testing::RandomPartition(static_cast<int>(rng.UniformInt(2, 20)), rng);
        x = testing::GenericPartitionPoint(p, rng);
        spec = std::move(p);
        break;
      }
      case 2: {
        Graph g = testing::RandomConnectedGraph(static_cast<int>(rng.UniformInt(3, 6)),
                                                static_cast<int>(rng.UniformInt(3, 9)), rng);
        std::vector<double> w(g.num_edges());
        for (double& v : w) v = rng.Uniform(0.2, 2);
        x = *SpanningTreeMarginals(g, w);
        spec = GraphicMatroid{std::move(g)};
        break;
      }
      default: {
        Graph g = testing::RandomGraph(static_cast<int>(rng.UniformInt(2, 10)), 0.4, rng);
        x = testing::RandomFstabPoint(g, rng);
        spec = FractionalStableSet{std::move(g), 0.0};
      }
    }
    std::vector<double> c(x.size());
    for (double& v : c) v = rng.Uniform(-1, 1);
    auto d = Decompose(x, spec);
    ASSERT_TRUE(d.ok()) << d.status();
    EXPECT_NEAR(EvaluateExtension(*d, LinearObjective(c)),
                std::inner_product(c.begin(), c.end(), x.begin(), 0.0), 1e-9);
  }
}

TEST(BestSetTest, Examples) {
  FunctionObjective f(Contains0);
  auto best = BestSet(SimplexDecomposition(), f);
  ASSERT_TRUE(best.ok());
  EXPECT_EQ(best->vertex, Set(3, {0}));
  EXPECT_EQ(best->value, 1.0);
  EXPECT_GE(best->value, EvaluateExtension(SimplexDecomposition(), f));
}

TEST(BestSetTest, TriangleForestWeight) {
  auto d = DecomposeGraphic(std::vector<double>{2.0 / 3, 2.0 / 3, 2.0 / 3}, TriangleGraph());
  ASSERT_TRUE(d.ok());
  LinearObjective weight({3, 2, 1});
  auto best = BestSet(*d, weight);
  ASSERT_TRUE(best.ok());
  EXPECT_EQ(best->vertex, Set(3, {0, 1}));
  EXPECT_EQ(best->value, 5.0);
}

TEST(BestSetTest, OnlyHalfIntegralIsAnError) {
  Decomposition d;
  d.pairs = {{1.0, *VertexSet::HalfIntegral({0.5, 0.5, 0.5})}};
  FunctionObjective f(Contains0);
  EXPECT_EQ(BestSet(d, f).status().code(), absl::StatusCode::kNotFound);
}

TEST(BackpropExtensionTest, LinearGivesCoefficients) {
  Rng rng(32, 0, Purpose::kTest);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = static_cast<int>(rng.UniformInt(2, 15));
    const int k = static_cast<int>(rng.UniformInt(1, n - 1));
    std::vector<double> c(n);
    for (double& v : c) v = rng.Uniform(-2, 2);
    std::vector<double> x = testing::GenericHypersimplexPoint(n, k, rng);
    auto taped = DecomposeWithTape(x, Cardinality{k});
    ASSERT_TRUE(taped.ok());
    std::vector<double> g = BackpropExtension(taped->tape, LinearObjective(c));
    // Coordinates pinned at 0 or 1 only move one way, so the comparison runs
    // over the face of x: free coordinates, with their common mean removed.
    std::vector<int> free;
    for (int i = 0; i < n; ++i) {
      if (x[i] > 0.0 && x[i] < 1.0) free.push_back(i);
    }
    if (free.size() < 2) continue;
    double g_mean = 0.0, c_mean = 0.0;
    for (int i : free) {
      g_mean += g[i] / free.size();
      c_mean += c[i] / free.size();
    }
    for (int i : free) EXPECT_NEAR(g[i] - g_mean, c[i] - c_mean, 1e-9);
  }
}

TEST(BackpropExtensionTest, SimplexIndicatorMatchesFiniteDifferences) {
  std::vector<double> x = {0.5, 0.3, 0.2};
  FunctionObjective f([](std::span<const int> s) {
    return s.size() == 1 && s[0] == 0 ? 1.0 : 0.0;
  });
  auto taped = DecomposeWithTape(x, Cardinality{1});
  ASSERT_TRUE(taped.ok());
  std::vector<int> classes = AffineHullClasses(Cardinality{1}, 3);
  std::vector<double> analytic = ProjectToTangent(BackpropExtension(taped->tape, f), classes);
  auto fd = FiniteDiffExtensionGradient(x, Cardinality{1}, f, 1e-6);
  ASSERT_TRUE(fd.ok());
  EXPECT_TRUE(fd->all_reliable);
  for (int i = 0; i < 3; ++i) {
    EXPECT_NEAR(analytic[i], fd->gradient[i],
                1e-4 * std::max(1e-12, testing::InfinityNorm(fd->gradient)));
  }
}

TEST(FiniteDiffGradientTest, TieIsFlagged) {
  // x_1 == x_2 sits on a kink of the top-k selection.
  std::vector<double> x = {0.5, 0.25, 0.25};
  FunctionObjective f([](std::span<const int> s) { return s[0] == 1 ? 1.0 : 0.0; });
  auto fd = FiniteDiffExtensionGradient(x, Cardinality{1}, f, 1e-6);
  ASSERT_TRUE(fd.ok());
  EXPECT_FALSE(fd->all_reliable);
}

TEST(FiniteDiffGradientTest, LinearAndSecondOrder) {
  std::vector<double> x = {0.55, 0.3, 0.15};
  LinearObjective linear({1.0, -2.0, 0.5});
  auto fd = FiniteDiffExtensionGradient(x, Cardinality{1}, linear, 1e-6);
  ASSERT_TRUE(fd.ok());
  std::vector<double> c = ProjectToTangent(std::vector<double>{1.0, -2.0, 0.5},
                                           AffineHullClasses(Cardinality{1}, 3));
  for (int i = 0; i < 3; ++i) EXPECT_NEAR(fd->gradient[i], c[i], 1e-8);

  // A smooth nonlinear extension piece: error shrinks by about 4 when h halves.
  FunctionObjective f([](std::span<const int> s) { return s[0] == 0 ? 1.0 : 0.0; });
  std::vector<double> y = {0.31, 0.27, 0.42};
  auto taped = DecomposeWithTape(y, Cardinality{1});
  std::vector<int> classes = AffineHullClasses(Cardinality{1}, 3);
  std::vector<double> exact = ProjectToTangent(BackpropExtension(taped->tape, f), classes);
  auto coarse = FiniteDiffExtensionGradient(y, Cardinality{1}, f, 1e-3);
  auto fine = FiniteDiffExtensionGradient(y, Cardinality{1}, f, 5e-4);
  ASSERT_TRUE(coarse.ok() && fine.ok());
  double e1 = 0.0, e2 = 0.0;
  for (int i = 0; i < 3; ++i) {
    e1 = std::max(e1, std::abs(coarse->gradient[i] - exact[i]));
    e2 = std::max(e2, std::abs(fine->gradient[i] - exact[i]));
  }
  if (e1 > 1e-10) {
    EXPECT_LT(e2, 0.35 * e1);
  }
}

// Analytic and numeric gradients agree at generic points of every family.
TEST(BackpropExtensionTest, PropertyAgreesWithFiniteDifferences) {
  Rng rng(33, 0, Purpose::kTest);
  int compared = 0, agreed = 0;
  for (int trial = 0; trial < 200; ++trial) {
    ConstraintSpec spec;
    std::vector<double> x;
    int n = 0;
    switch (trial % 4) {
      case 0: {
        n = static_cast<int>(rng.UniformInt(3, 10));
        const int k = static_cast<int>(rng.UniformInt(1, n - 1));
        spec = Cardinality{k};
        x = testing::GenericHypersimplexPoint(n, k, rng);
        break;
      }
      case 1: {
        PartitionMatroid p = testing::RandomPartition(static_cast<int>(rng.UniformInt(3, 10)), rng);
        n = p.dimension();
        x = testing::GenericPartitionPoint(p, rng);
        spec = std::move(p);
        break;
      }
      case 2: {
        Graph g = testing::RandomConnectedGraph(static_cast<int>(rng.UniformInt(3, 5)),
                                                static_cast<int>(rng.UniformInt(3, 7)), rng);
        n = g.num_edges();
        std::vector<double> w(n);
        for (double& v : w) v = rng.Uniform(0.2, 2);
        x = *SpanningTreeMarginals(g, w);
        spec = GraphicMatroid{std::move(g)};
        break;
      }
      default: {
        Graph g = testing::RandomGraph(static_cast<int>(rng.UniformInt(3, 8)), 0.4, rng);
        n = g.num_nodes;
        std::vector<double> z(n);
        for (double& v : z) v = rng.UniformDouble();
        x = *ProjectToFstab(z, g);
        for (double& v : x) v = 0.85 * v + 0.05;
        spec = FractionalStableSet{std::move(g), 0.0};
      }
    }
    testing::RandomSetFunction f(n, rng);
    auto taped = DecomposeWithTape(x, spec);
    ASSERT_TRUE(taped.ok()) << taped.status();
    auto fd = FiniteDiffExtensionGradient(x, spec, f, 1e-6);
    ASSERT_TRUE(fd.ok()) << trial << " " << fd.status();
    if (!fd->all_reliable) continue;
    std::vector<double> analytic =
        ProjectToTangent(BackpropExtension(taped->tape, f), AffineHullClasses(spec, n));
    double diff = 0.0;
    for (int i = 0; i < n; ++i) diff = std::max(diff, std::abs(analytic[i] - fd->gradient[i]));
    ++compared;
    if (diff <= 1e-4 * std::max(testing::InfinityNorm(fd->gradient), 1e-8)) ++agreed;
  }
  EXPECT_GE(compared, 100);
  EXPECT_GE(agreed, 0.99 * compared);
}

}  // namespace
}  // namespace polydec
