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

#include "polydec/solvers.h"

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "polydec/adam.h"
#include "polydec/generators.h"
#include "polydec/graphic.h"
#include "test_util.h"

namespace polydec {
namespace {

using ::testing::ElementsAre;

CoverageInstance Coverage(int num_elements, std::vector<std::vector<int>> sets) {
  CoverageInstance inst;
  inst.num_sets = static_cast<int>(sets.size());
  inst.num_elements = num_elements;
  inst.weights.assign(num_elements, 1.0);
  inst.sets = std::move(sets);
  return inst;
}

CoverageInstance SmallRandomCoverage(uint64_t seed, int num_sets) {
  CoverageGenParams params;
  params.num_sets = num_sets;
  params.num_elements = 3 * num_sets;
  params.min_degree = 2;
  params.max_degree = 6;
  return *GenerateRandomUniform(params, seed);
}

TEST(AdamTest, MatchesReferenceRecurrence) {
  AdamConfig config;
  Adam adam(2, config);
  std::vector<double> params = {1.0, -1.0};
  std::vector<double> ref = params;
  double m[2] = {0, 0}, v[2] = {0, 0};
  const std::vector<std::vector<double>> grads = {{2.0, -0.5}, {1.0, 0.25}, {-3.0, 0.0}};
  for (size_t t = 1; t <= grads.size(); ++t) {
    adam.Step(params, grads[t - 1]);
    for (int i = 0; i < 2; ++i) {
      const double g = grads[t - 1][i];
      m[i] = 0.9 * m[i] + 0.1 * g;
      v[i] = 0.999 * v[i] + 0.001 * g * g;
      const double mh = m[i] / (1 - std::pow(0.9, t));
      const double vh = v[i] / (1 - std::pow(0.999, t));
      ref[i] -= 0.015 * mh / (std::sqrt(vh) + 1e-8);
    }
    EXPECT_NEAR(params[0], ref[0], 1e-15);
    EXPECT_NEAR(params[1], ref[1], 1e-15);
  }
  EXPECT_EQ(adam.steps_taken(), 3);
}

TEST(AdamTest, AscentMinimizesNegatedQuadratic) {
  AdamConfig config;
  config.learning_rate = 0.05;
  Adam adam(1, config);
  std::vector<double> p = {3.0};
  for (int t = 0; t < 2000; ++t) {
    std::vector<double> g = {-2.0 * (p[0] - 1.0)};  // gradient of -(p - 1)^2
    adam.AscentStep(p, g);
  }
  EXPECT_NEAR(p[0], 1.0, 1e-2);
}

TEST(DirectOptimizeTest, ZeroStepsRoundsTheCenter) {
  CoverageInstance inst = SmallRandomCoverage(51, 8);
  CoverageObjective f(inst);
  OptimizeConfig config;
  config.steps = 0;
  auto result = DirectOptimize(f, Cardinality{3}, 8, config);
  ASSERT_TRUE(result.ok());
  std::vector<double> center(8, 3.0 / 8);
  auto d = Decompose(center, Cardinality{3});
  ASSERT_TRUE(d.ok());
  auto best = BestSet(*d, f);
  ASSERT_TRUE(best.ok());
  EXPECT_EQ(result->best, best->vertex);
  EXPECT_EQ(result->objective, best->value);
  for (double v : result->point) EXPECT_NEAR(v, 3.0 / 8, 1e-12);
}

TEST(DirectOptimizeTest, RejectsBadConfig) {
  LinearObjective f({1, 2, 3});
  OptimizeConfig config;
  config.steps = -1;
  EXPECT_FALSE(DirectOptimize(f, Cardinality{1}, 3, config).ok());
  config.steps = 1;
  config.adam.learning_rate = 0.0;
  EXPECT_FALSE(DirectOptimize(f, Cardinality{1}, 3, config).ok());
  config.adam.learning_rate = 0.015;
  EXPECT_EQ(DirectOptimize(f, Cardinality{4}, 3, config).status().code(),
            absl::StatusCode::kFailedPrecondition);
}

TEST(DirectOptimizeTest, FindsLinearOptimumInEveryFamily) {
  OptimizeConfig config;
  config.steps = 150;
  config.adam.learning_rate = 0.1;

  LinearObjective card({0.1, 0.9, 0.2, 0.8, 0.3});
  auto a = DirectOptimize(card, Cardinality{2}, 5, config);
  ASSERT_TRUE(a.ok()) << a.status();
  EXPECT_THAT(a->best.indices(), ElementsAre(1, 3));

  PartitionMatroid p{{{0, 1}, {2, 3, 4}}, {1, 1}};
  auto b = DirectOptimize(card, p, 5, config);
  ASSERT_TRUE(b.ok()) << b.status();
  EXPECT_THAT(b->best.indices(), ElementsAre(1, 3));

  LinearObjective tree({3, 2, 1});
  auto c = DirectOptimize(tree, GraphicMatroid{TriangleGraph()}, 3, config);
  ASSERT_TRUE(c.ok()) << c.status();
  EXPECT_THAT(c->best.indices(), ElementsAre(0, 1));

  LinearObjective stable({1, 3, 3, 1});
  auto d = DirectOptimize(stable, FractionalStableSet{PathGraph(4), 0.0}, 4, config);
  ASSERT_TRUE(d.ok()) << d.status();
  EXPECT_EQ(d->objective, 4.0);
}

// The best set found never scores below the extension value it rounds.
TEST(DirectOptimizeTest, RoundingGuaranteeAndDeterminism) {
  for (uint64_t seed = 0; seed < 10; ++seed) {
    auto g = GenerateErdosRenyi(10, 0.4, 52, seed);
    ASSERT_TRUE(g.ok());
    CutObjective f(*g);
    OptimizeConfig config;
    config.steps = 30;
    config.seed = seed;
    config.perturb_init = true;
    auto r1 = DirectOptimize(f, Cardinality{3}, 10, config);
    auto r2 = DirectOptimize(f, Cardinality{3}, 10, config);
    ASSERT_TRUE(r1.ok() && r2.ok());
    EXPECT_GE(r1->objective, r1->extension - 1e-9);
    EXPECT_EQ(r1->best, r2->best);
    EXPECT_EQ(r1->objective, r2->objective);
    EXPECT_EQ(r1->point, r2->point);
    EXPECT_EQ(static_cast<int>(r1->best.indices().size()), 3);
  }
}

TEST(ParameterizationTest, BackwardMatchesFiniteDifferences) {
  Rng rng(53, 0, Purpose::kTest);
  PartitionMatroid p{{{0, 1, 2}, {3, 4}}, {2, 1}};
  Graph g = CycleGraph(4);
  g.edges.push_back({0, 2});
  std::vector<std::pair<ConstraintSpec, int>> cases;
  cases.push_back({Cardinality{2}, 5});
  cases.push_back({p, 5});
  cases.push_back({GraphicMatroid{g}, 5});
  cases.push_back({FractionalStableSet{PathGraph(5), 0.0}, 5});
  for (const auto& [spec, n] : cases) {
    Parameterization param(spec, n);
    std::vector<double> z(n), w(n);
    for (double& v : z) v = rng.Uniform(0.1, 0.9);
    for (double& v : w) v = rng.Uniform(-1, 1);
    auto back = param.Backward(z, w);
    ASSERT_TRUE(back.ok()) << back.status();
    for (int i = 0; i < n; ++i) {
      const double h = 1e-6;
      std::vector<double> zp = z, zm = z;
      zp[i] += h;
      zm[i] -= h;
      auto xp = param.Forward(zp);
      auto xm = param.Forward(zm);
      ASSERT_TRUE(xp.ok() && xm.ok());
      double fd = 0.0;
      for (int j = 0; j < n; ++j) fd += w[j] * ((*xp)[j] - (*xm)[j]) / (2 * h);
      EXPECT_NEAR((*back)[i], fd, 1e-4 * std::max(1.0, std::abs(fd)));
    }
  }
}

TEST(MultiScaleSolveTest, SingleUnitScaleIsBestSetOfDecompose) {
  Rng rng(54, 0, Purpose::kTest);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 12, k = 4;
    std::vector<double> x = testing::GenericHypersimplexPoint(n, k, rng);
    testing::RandomSetFunction f(n, rng);
    ScaleSchedule schedule;
    schedule.scales = {1.0};
    auto multi = MultiScaleSolve(x, schedule, f, Cardinality{k});
    ASSERT_TRUE(multi.ok());
    auto d = Decompose(x, Cardinality{k});
    auto best = BestSet(*d, f);
    ASSERT_TRUE(best.ok());
    EXPECT_EQ(multi->result.best, best->vertex);
    EXPECT_EQ(multi->result.objective, best->value);
  }
}

TEST(MultiScaleSolveTest, MoreScalesNeverHurt) {
  Rng rng(55, 0, Purpose::kTest);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<double> x = testing::GenericHypersimplexPoint(15, 5, rng);
    testing::RandomSetFunction f(15, rng);
    ScaleSchedule small, large;
    small.scales = {1.0, 0.5};
    large.scales = {1.0, 0.5, 0.2, 0.05};
    auto a = MultiScaleSolve(x, small, f, Cardinality{5}, trial);
    auto b = MultiScaleSolve(x, large, f, Cardinality{5}, trial);
    ASSERT_TRUE(a.ok() && b.ok());
    EXPECT_GE(b->result.objective, a->result.objective);
    EXPECT_GE(b->pool.size(), a->pool.size());
  }
}

TEST(MultiScaleSolveTest, RejectsScaleOutsideUnitInterval) {
  ScaleSchedule schedule;
  schedule.scales = {1.0, 1.5};
  std::vector<double> x = {0.5, 0.5};
  EXPECT_FALSE(MultiScaleSolve(x, schedule, LinearObjective({1, 1}), Cardinality{1}).ok());
}

// Paired comparison on the 20-choose-5 hypersimplex with coverage objectives.
TEST(MultiScaleSolveTest, FullScheduleBeatsSingleScaleOnAverage) {
  Rng rng(56, 0, Purpose::kTest);
  double single_total = 0.0, full_total = 0.0;
  for (uint64_t seed = 0; seed < 200; ++seed) {
    CoverageInstance inst = SmallRandomCoverage(1000 + seed, 20);
    CoverageObjective f(inst);
    std::vector<double> x = testing::GenericHypersimplexPoint(20, 5, rng);
    ScaleSchedule single;
    single.scales = {1.0};
    ScaleSchedule full;
    auto a = MultiScaleSolve(x, single, f, Cardinality{5}, seed);
    auto b = MultiScaleSolve(x, full, f, Cardinality{5}, seed);
    ASSERT_TRUE(a.ok() && b.ok());
    EXPECT_GE(b->result.objective, a->result.objective);
    single_total += a->result.objective;
    full_total += b->result.objective;
  }
  EXPECT_GT(full_total, single_total * 1.001);
}

TEST(LocalImproveTest, Examples) {
  CoverageInstance chain = Coverage(4, {{0, 1}, {1, 2}, {2, 3}});
  CoverageObjective cover(chain);
  auto kept = LocalImprove(std::vector<int>{1}, std::vector<int>{0, 2}, cover,
                           Cardinality{1}, 3);
  ASSERT_TRUE(kept.ok());
  EXPECT_THAT(*kept, ElementsAre(1));

  Graph triangle = TriangleGraph();
  CutObjective cut(triangle);
  auto same = LocalImprove(std::vector<int>{0}, std::vector<int>{1, 2}, cut,
                           Cardinality{1}, 3);
  ASSERT_TRUE(same.ok());
  EXPECT_THAT(*same, ElementsAre(0));

  // {0} alone covers one element; swapping in set 2 covers three.
  CoverageInstance uneven = Coverage(4, {{0}, {1}, {1, 2, 3}});
  CoverageObjective f(uneven);
  auto better = LocalImprove(std::vector<int>{0}, std::vector<int>{1, 2}, f,
                             Cardinality{1}, 3);
  ASSERT_TRUE(better.ok());
  EXPECT_THAT(*better, ElementsAre(2));
}

TEST(LocalImproveTest, RespectsPartitionBlocks) {
  PartitionMatroid p{{{0, 1}, {2, 3}}, {1, 1}};
  LinearObjective f({1, 5, 2, 1});
  // Swapping 3 for 1 would break the block budgets; 0 for 1 is allowed.
  auto out = LocalImprove(std::vector<int>{0, 3}, std::vector<int>{1, 2}, f, p, 4);
  ASSERT_TRUE(out.ok());
  EXPECT_THAT(*out, ElementsAre(1, 2));
}

TEST(LocalImproveTest, NeverWorseAndFeasible) {
  Rng rng(57, 0, Purpose::kTest);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = static_cast<int>(rng.UniformInt(4, 14));
    const int k = static_cast<int>(rng.UniformInt(1, n - 1));
    testing::RandomSetFunction f(n, rng);
    std::vector<int> s = rng.SampleWithoutReplacement(n, k);
    std::sort(s.begin(), s.end());
    std::vector<int> pool(n);
    std::iota(pool.begin(), pool.end(), 0);
    const int max_iter = static_cast<int>(rng.UniformInt(0, 5));
    auto out = LocalImprove(s, pool, f, Cardinality{k}, n, max_iter);
    ASSERT_TRUE(out.ok());
    EXPECT_EQ(static_cast<int>(out->size()), k);
    EXPECT_GE(f.ValueOfSet(*out), f.ValueOfSet(s));
    // At most one swap per iteration.
    std::vector<int> dropped;
    std::set_difference(s.begin(), s.end(), out->begin(), out->end(),
                        std::back_inserter(dropped));
    EXPECT_LE(static_cast<int>(dropped.size()), max_iter);
  }
}

TEST(GreedyCoverageTest, Examples) {
  CoverageInstance inst = Coverage(4, {{0, 1, 2}, {0}, {3}});
  auto none = GreedyCoverage(inst, 0);
  ASSERT_TRUE(none.ok());
  EXPECT_TRUE(none->best.indices().empty());
  EXPECT_EQ(none->objective, 0.0);
  auto two = GreedyCoverage(inst, 2);
  ASSERT_TRUE(two.ok());
  EXPECT_THAT(two->best.indices(), ElementsAre(0, 2));
  EXPECT_EQ(two->objective, 4.0);
  EXPECT_EQ(two->method, "greedy");
  EXPECT_EQ(GreedyCoverage(inst, 4).status().code(),
            absl::StatusCode::kFailedPrecondition);
}

TEST(GreedyCoverageTest, TiesGoToSmallestIndex) {
  CoverageInstance inst = Coverage(3, {{0}, {1}, {2}});
  auto r = GreedyCoverage(inst, 2);
  ASSERT_TRUE(r.ok());
  EXPECT_THAT(r->best.indices(), ElementsAre(0, 1));
}

TEST(GreedyCoverageTest, WithinApproximationRatioOfOptimum) {
  for (uint64_t seed = 0; seed < 40; ++seed) {
    CoverageInstance inst = SmallRandomCoverage(2000 + seed, 14);
    const int k = 1 + static_cast<int>(seed % 5);
    auto greedy = GreedyCoverage(inst, k);
    auto opt = BruteForceOptimum(CoverageObjective(inst), Cardinality{k}, 14);
    ASSERT_TRUE(greedy.ok() && opt.ok());
    EXPECT_GE(greedy->objective, (1.0 - 1.0 / std::exp(1.0)) * opt->value - 1e-9);
    EXPECT_LE(greedy->objective, opt->value + 1e-9);
  }
}

TEST(SampleFeasibleSetTest, EveryFamilyYieldsFeasibleSets) {
  Rng rng(58, 0, Purpose::kTest);
  PartitionMatroid p{{{0, 1, 2}, {3, 4}}, {2, 1}};
  Graph g = CompleteGraph(4);
  Graph path = PathGraph(6);
  for (int trial = 0; trial < 50; ++trial) {
    auto a = SampleFeasibleSet(Cardinality{3}, 7, rng);
    auto b = SampleFeasibleSet(p, 5, rng);
    auto c = SampleFeasibleSet(GraphicMatroid{g}, 6, rng);
    auto d = SampleFeasibleSet(FractionalStableSet{path, 0.0}, 6, rng);
    ASSERT_TRUE(a.ok() && b.ok() && c.ok() && d.ok());
    EXPECT_TRUE(IsFeasibleVertex(Cardinality{3}, *VertexSet::Integral(7, *a)));
    EXPECT_TRUE(IsFeasibleVertex(p, *VertexSet::Integral(5, *b)));
    EXPECT_TRUE(IsFeasibleVertex(GraphicMatroid{g}, *VertexSet::Integral(6, *c)));
    EXPECT_TRUE(IsFeasibleVertex(FractionalStableSet{path, 0.0},
                                 *VertexSet::Integral(6, *d)));
    // Maximal: no node of the path can be added.
    std::vector<char> taken(6, 0);
    for (int v : *d) taken[v] = 1;
    for (int v = 0; v < 6; ++v) {
      if (taken[v]) continue;
      const bool blocked = (v > 0 && taken[v - 1]) || (v < 5 && taken[v + 1]);
      EXPECT_TRUE(blocked);
    }
  }
}

TEST(RandomBaselineTest, OneTrialIsOneSample) {
  CoverageInstance inst = SmallRandomCoverage(59, 10);
  CoverageObjective f(inst);
  RandomBudget budget;
  budget.trials = 1;
  auto r = RandomBaseline(f, Cardinality{3}, 10, budget, 7);
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r->iterations, 1);
  EXPECT_EQ(r->objective, f.ValueOfSet(r->best.indices()));
  EXPECT_EQ(static_cast<int>(r->best.indices().size()), 3);
}

TEST(RandomBaselineTest, NondecreasingInTrialsAndDeterministic) {
  CoverageInstance inst = SmallRandomCoverage(60, 30);
  CoverageObjective f(inst);
  double last = -1.0;
  for (int64_t trials : {1, 2, 5, 20, 100, 1000}) {
    RandomBudget budget;
    budget.trials = trials;
    auto a = RandomBaseline(f, Cardinality{5}, 30, budget, 11);
    auto b = RandomBaseline(f, Cardinality{5}, 30, budget, 11);
    ASSERT_TRUE(a.ok() && b.ok());
    EXPECT_GE(a->objective, last);
    EXPECT_EQ(a->best, b->best);
    last = a->objective;
  }
}

TEST(RandomBaselineTest, BelowGreedyOnCoverage) {
  double random_total = 0.0, greedy_total = 0.0;
  for (uint64_t instance = 0; instance < 3; ++instance) {
    CoverageGenParams params;
    auto inst = GenerateRandomUniform(params, 61, instance);
    ASSERT_TRUE(inst.ok());
    CoverageObjective f(*inst);
    RandomBudget budget;
    budget.trials = 10000;
    auto r = RandomBaseline(f, Cardinality{50}, params.num_sets, budget, instance);
    auto g = GreedyCoverage(*inst, 50);
    ASSERT_TRUE(r.ok() && g.ok());
    random_total += r->objective;
    greedy_total += g->objective;
  }
  EXPECT_LT(random_total, greedy_total);
}

TEST(RandomPointDecompBaselineTest, FeasibleAndDeterministic) {
  Graph g = CompleteGraph(4);
  LinearObjective f({1, 2, 3, 4, 5, 6});
  auto a = RandomPointDecompBaseline(f, GraphicMatroid{g}, 6, 3);
  auto b = RandomPointDecompBaseline(f, GraphicMatroid{g}, 6, 3);
  ASSERT_TRUE(a.ok() && b.ok()) << a.status();
  EXPECT_TRUE(IsFeasibleVertex(GraphicMatroid{g}, a->best));
  EXPECT_EQ(a->best, b->best);
  EXPECT_EQ(a->method, "random+decomp");
}

}  // namespace
}  // namespace polydec
