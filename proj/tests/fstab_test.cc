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

#include "polydec/fstab.h"

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include <numeric>

#include "polydec/constraint.h"
#include "polydec/extension.h"
#include "polydec/graph.h"
#include "polydec/min_cut.h"
#include "polydec/rng.h"
#include "test_util.h"

namespace polydec {
namespace {

using ::testing::DoubleNear;
using ::testing::ElementsAre;

Graph SingleEdge() { return *MakeGraph(2, {{0, 1}}); }

VertexSet Half(std::vector<double> values) {
  return *VertexSet::HalfIntegral(std::move(values));
}

TEST(MaxFlowTest, SmallNetwork) {
  MaxFlow flow(4);
  flow.AddEdge(0, 1, 3);
  flow.AddEdge(0, 2, 2);
  flow.AddEdge(1, 2, 1);
  flow.AddEdge(1, 3, 2);
  flow.AddEdge(2, 3, 3);
  EXPECT_DOUBLE_EQ(flow.Solve(0, 3), 5.0);
  EXPECT_TRUE(flow.OnSourceSide(0));
  EXPECT_FALSE(flow.OnSourceSide(3));
}

TEST(ProjectToFstabTest, Examples) {
  EXPECT_THAT(*ProjectToFstab(std::vector<double>{0.8, 0.8}, SingleEdge()),
              ElementsAre(DoubleNear(0.5, 1e-15), DoubleNear(0.5, 1e-15)));
  EXPECT_THAT(*ProjectToFstab(std::vector<double>{0.1, 0.05}, SingleEdge()),
              ElementsAre(0.1, 0.05));
  EXPECT_THAT(*ProjectToFstab(std::vector<double>{0.3, 0.7, 0.2}, PathGraph(3)),
              ElementsAre(0.3, 0.7, 0.2));
}

TEST(ProjectToFstabTest, SlackIsRespected) {
  auto x = ProjectToFstab(std::vector<double>{0.8, 0.8}, SingleEdge(), 0.2);
  ASSERT_TRUE(x.ok());
  EXPECT_LE((*x)[0] + (*x)[1] + 0.2, 1.0 + 1e-12);
  EXPECT_FALSE(ProjectToFstab(std::vector<double>{0.8, 0.8}, SingleEdge(), 1.0).ok());
}

TEST(ProjectToFstabTest, PropertyOutputIsFeasible) {
  Rng rng(20, 0, Purpose::kTest);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = static_cast<int>(rng.UniformInt(2, 50));
    Graph g = testing::RandomGraph(n, rng.Uniform(0.05, 0.5), rng);
    const double slack = rng.Bernoulli(0.5) ? 0.0 : rng.Uniform(0.0, 0.3);
    std::vector<double> x(n);
    for (double& v : x) v = rng.UniformDouble();
    auto y = ProjectToFstab(x, g, slack);
    ASSERT_TRUE(y.ok());
    for (double v : *y) {
      EXPECT_GE(v, 0.0);
      EXPECT_LE(v, 1.0);
    }
    for (const auto& [u, v] : g.edges) {
      EXPECT_LE((*y)[u] + (*y)[v] + slack, 1.0 + 1e-12);
    }
  }
}

// One correction pass already fixes every violated edge.
TEST(ProjectToFstabTest, PropertySinglePassSuffices) {
  Rng rng(21, 0, Purpose::kTest);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = static_cast<int>(rng.UniformInt(2, 30));
    Graph g = testing::RandomGraph(n, rng.Uniform(0.05, 0.5), rng);
    std::vector<double> x(n);
    for (double& v : x) v = rng.UniformDouble();
    std::vector<int> degree(n, 0);
    double eta = 0.0;
    for (const auto& [u, v] : g.edges) {
      if (x[u] + x[v] > 1.0) {
        ++degree[u];
        ++degree[v];
      }
    }
    for (const auto& [u, v] : g.edges) {
      if (x[u] + x[v] > 1.0) {
        eta = std::max(eta, (x[u] + x[v] - 1.0) / (degree[u] + degree[v]));
      }
    }
    std::vector<double> once(x);
    for (int i = 0; i < n; ++i) once[i] = std::max(0.0, x[i] - eta * degree[i]);
    for (const auto& [u, v] : g.edges) EXPECT_LE(once[u] + once[v], 1.0 + 1e-12);
  }
}

TEST(ProjectToFstabTest, VjpMatchesFiniteDifferences) {
  Rng rng(22, 0, Purpose::kTest);
  int checked = 0;
  for (int trial = 0; trial < 200 && checked < 50; ++trial) {
    const int n = static_cast<int>(rng.UniformInt(2, 10));
    Graph g = testing::RandomGraph(n, 0.4, rng);
    std::vector<double> x(n), w(n);
    for (double& v : x) v = rng.Uniform(0.05, 0.95);
    for (double& v : w) v = rng.Uniform(-1, 1);
    std::vector<double> vjp = ProjectToFstabVjp(x, g, 0.0, w);
    const double h = 1e-7;
    bool smooth = true;
    std::vector<double> fd(n);
    std::vector<double> base = *ProjectToFstab(x, g);
    for (int i = 0; i < n && smooth; ++i) {
      std::vector<double> xp = x, xm = x;
      xp[i] += h;
      xm[i] -= h;
      auto yp = *ProjectToFstab(xp, g);
      auto ym = *ProjectToFstab(xm, g);
      double a = 0.0, b = 0.0;
      for (int j = 0; j < n; ++j) {
        a += w[j] * (yp[j] - base[j]) / h;
        b += w[j] * (base[j] - ym[j]) / h;
      }
      // Skip kinks where one-sided slopes differ.
      if (std::abs(a - b) > 1e-5) smooth = false;
      fd[i] = 0.5 * (a + b);
    }
    if (!smooth) continue;
    ++checked;
    for (int i = 0; i < n; ++i) EXPECT_NEAR(vjp[i], fd[i], 1e-5);
  }
  EXPECT_GE(checked, 20);
}

TEST(FstabVertexTest, Examples) {
  EXPECT_EQ(*FstabVertex(std::vector<double>{0.6, 0.2}, SingleEdge()),
            *VertexSet::Integral(2, {0}));
  Graph empty = *MakeGraph(3, {});
  EXPECT_EQ(*FstabVertex(std::vector<double>{0.3, 0.2, 0.4}, empty),
            *VertexSet::Integral(3, {0, 1, 2}));
  // On a triangle the all-halves point is the unique maximizer.
  EXPECT_EQ(*FstabVertex(std::vector<double>{0.5, 0.5, 0.5}, TriangleGraph()),
            Half({0.5, 0.5, 0.5}));
}

// On a single edge (1/2, 1/2) ties (1, 0) and (0, 1) but is not a vertex: the
// edge polytope is integral. The oracle returns the lexicographic maximum.
TEST(FstabVertexTest, SingleEdgeTieIsIntegral) {
  VertexSet v = *FstabVertex(std::vector<double>{0.5, 0.5}, SingleEdge());
  EXPECT_TRUE(v.is_integral());
  EXPECT_EQ(v, *VertexSet::Integral(2, {0}));
}

TEST(FstabVertexTest, PropertyLexMaxMatchesEnumeration) {
  Rng rng(23, 0, Purpose::kTest);
  for (int graph_trial = 0; graph_trial < 20; ++graph_trial) {
    const int n = static_cast<int>(rng.UniformInt(2, 9));
    Graph g = testing::RandomGraph(n, rng.Uniform(0.2, 0.7), rng);
    const auto points = testing::HalfIntegralStablePoints(g);
    for (int trial = 0; trial < 25; ++trial) {
      // Small integer weights produce many ties.
      std::vector<double> c(n);
      for (double& v : c) v = static_cast<double>(rng.UniformInt(-2, 4));
      auto v = FstabLexMaxVertex(c, g);
      ASSERT_TRUE(v.ok());
      EXPECT_EQ(v->ToDense(), testing::LexMaxByEnumeration(points, c));
      double best = -INFINITY;
      for (const auto& y : points) {
        best = std::max(best, std::inner_product(y.begin(), y.end(), c.begin(), 0.0));
      }
      EXPECT_NEAR(FstabOptimum(c, g), best, 1e-9);
    }
  }
}

TEST(FstabStepCoefficientTest, Examples) {
  auto a = FstabStepCoefficient(std::vector<double>{0.6, 0.2}, *VertexSet::Integral(2, {0}),
                                SingleEdge());
  ASSERT_TRUE(a.ok());
  EXPECT_NEAR(a->coefficient.value, 0.6, 1e-15);
  EXPECT_EQ(a->record.id, 0);  // x_0 >= 0

  auto b = FstabStepCoefficient(std::vector<double>{0.0, 0.5}, *VertexSet::Integral(2, {1}),
                                SingleEdge());
  ASSERT_TRUE(b.ok());
  EXPECT_NEAR(b->coefficient.value, 0.5, 1e-15);
  EXPECT_EQ(b->record.id, 1);  // x_1 >= 0

  auto c = FstabStepCoefficient(std::vector<double>{1.0, 0.0}, *VertexSet::Integral(2, {0}),
                                SingleEdge());
  ASSERT_TRUE(c.ok());
  EXPECT_EQ(c->coefficient.kind, BindingKind::kTerminal);
}

TEST(DecomposeFstabTest, Examples) {
  auto d = DecomposeFstab(std::vector<double>{0.6, 0.2}, SingleEdge());
  ASSERT_TRUE(d.ok());
  ASSERT_EQ(d->pairs.size(), 3u);
  EXPECT_NEAR(d->pairs[0].probability, 0.6, 1e-12);
  EXPECT_EQ(d->pairs[0].vertex, *VertexSet::Integral(2, {0}));
  EXPECT_NEAR(d->pairs[1].probability, 0.2, 1e-12);
  EXPECT_EQ(d->pairs[1].vertex, *VertexSet::Integral(2, {1}));
  EXPECT_NEAR(d->pairs[2].probability, 0.2, 1e-12);
  EXPECT_EQ(d->pairs[2].vertex, *VertexSet::Integral(2, {}));

  auto independent = DecomposeFstab(std::vector<double>{1, 0, 1}, PathGraph(3));
  ASSERT_TRUE(independent.ok());
  ASSERT_EQ(independent->pairs.size(), 1u);
  EXPECT_EQ(independent->pairs[0].vertex, *VertexSet::Integral(3, {0, 2}));

  auto halves = DecomposeFstab(std::vector<double>{0.5, 0.5, 0.5}, TriangleGraph());
  ASSERT_TRUE(halves.ok());
  ASSERT_EQ(halves->pairs.size(), 1u);
  EXPECT_EQ(halves->pairs[0].probability, 1.0);
  EXPECT_EQ(halves->pairs[0].vertex, Half({0.5, 0.5, 0.5}));
}

TEST(DecomposeFstabTest, SingleEdgeHalvesSplitIntoEndpoints) {
  auto d = DecomposeFstab(std::vector<double>{0.5, 0.5}, SingleEdge());
  ASSERT_TRUE(d.ok());
  ASSERT_EQ(d->pairs.size(), 2u);
  EXPECT_NEAR(d->pairs[0].probability, 0.5, 1e-15);
  EXPECT_EQ(d->pairs[0].vertex, *VertexSet::Integral(2, {0}));
  EXPECT_NEAR(d->pairs[1].probability, 0.5, 1e-15);
  EXPECT_EQ(d->pairs[1].vertex, *VertexSet::Integral(2, {1}));
}

TEST(DecomposeFstabTest, RejectsOutsidePolytope) {
  EXPECT_FALSE(DecomposeFstab(std::vector<double>{0.7, 0.6}, SingleEdge()).ok());
}

// Reconstruction, independence of integral vertices, the n + 1 bound, and
// persistence of tight edges along the run.
TEST(DecomposeFstabTest, PropertyRandomGraphs) {
  Rng rng(24, 0, Purpose::kTest);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = static_cast<int>(rng.UniformInt(2, 12));
    Graph g = testing::RandomGraph(n, rng.Uniform(0.1, 0.6), rng);
    std::vector<double> x = testing::RandomFstabPoint(g, rng);
    auto taped = DecomposeFstabWithTape(x, g);
    ASSERT_TRUE(taped.ok()) << taped.status();
    const Decomposition& d = taped->decomposition;
    FractionalStableSet spec{g, 0.0};
    DecompositionReport report = ValidateDecomposition(d, spec, x);
    EXPECT_TRUE(report.ExactPasses(1e-9)) << report.DebugString();
    EXPECT_LE(d.iterations, n + 1);
    for (const auto& pair : d.pairs) {
      if (!pair.vertex.is_integral()) continue;
      for (const auto& [u, v] : g.edges) {
        EXPECT_FALSE(pair.vertex.Contains(u) && pair.vertex.Contains(v));
      }
    }
    std::vector<bool> tight(g.num_edges(), false);
    for (const TapeStep& step : taped->tape.steps) {
      for (int e = 0; e < g.num_edges(); ++e) {
        const auto [u, v] = g.edges[e];
        const bool now = step.iterate[u] + step.iterate[v] >= 1.0 - 1e-9;
        if (tight[e]) {
          EXPECT_TRUE(now) << "edge " << e << " lost tightness";
        }
        tight[e] = tight[e] || now;
      }
    }
  }
}

}  // namespace
}  // namespace polydec
