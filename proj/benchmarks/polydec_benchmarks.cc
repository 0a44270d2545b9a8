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

#include <benchmark/benchmark.h>

#include <vector>

#include "polydec/extension.h"
#include "polydec/fstab.h"
#include "polydec/generators.h"
#include "polydec/graph.h"
#include "polydec/graphic.h"
#include "polydec/hypersimplex.h"
#include "polydec/rng.h"
#include "polydec/solvers.h"

namespace polydec {
namespace {

std::vector<double> UniformVector(int n, uint64_t instance) {
  Rng rng(7, instance, Purpose::kTest);
  std::vector<double> z(n);
  for (double& v : z) v = rng.UniformDouble();
  return z;
}

void BM_DecomposeHypersimplex(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int k = n / 4;
  const std::vector<double> x = *ProjectToHypersimplex(UniformVector(n, 1), k);
  for (auto _ : state) {
    benchmark::DoNotOptimize(Decompose(x, Cardinality{k}));
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_DecomposeHypersimplex)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

void BM_DecomposeRescaled(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int k = n / 4;
  const std::vector<double> x = *ProjectToHypersimplex(UniformVector(n, 2), k);
  DecompositionConfig config;
  config.scale = 0.5;
  config.floor = 0.05;
  config.tolerance = 1e-6;
  for (auto _ : state) {
    benchmark::DoNotOptimize(Decompose(x, Cardinality{k}, config));
  }
}
BENCHMARK(BM_DecomposeRescaled)->Arg(64)->Arg(256);

void BM_SpanningTreeMarginals(benchmark::State& state) {
  const Graph g = CompleteGraph(static_cast<int>(state.range(0)));
  const std::vector<double> w = UniformVector(g.num_edges(), 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(SpanningTreeMarginals(g, w));
  }
}
BENCHMARK(BM_SpanningTreeMarginals)->Arg(8)->Arg(32)->Arg(64);

void BM_DecomposeGraphic(benchmark::State& state) {
  const Graph g = CompleteGraph(static_cast<int>(state.range(0)));
  const std::vector<double> x = *SpanningTreeMarginals(g, UniformVector(g.num_edges(), 4));
  for (auto _ : state) {
    benchmark::DoNotOptimize(Decompose(x, GraphicMatroid{g}));
  }
}
BENCHMARK(BM_DecomposeGraphic)->Arg(4)->Arg(5);

void BM_FstabLexMaxVertex(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph g = *GenerateErdosRenyi(n, 0.3, 5, 0);
  std::vector<double> c = UniformVector(n, 5);
  for (double& v : c) v -= 0.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(FstabLexMaxVertex(c, g));
  }
}
BENCHMARK(BM_FstabLexMaxVertex)->Arg(12)->Arg(48);

void BM_GreedyCoverage(benchmark::State& state) {
  const CoverageInstance instance = *GenerateRandomUniform(CoverageGenParams(), 6, 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(GreedyCoverage(instance, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_GreedyCoverage)->Arg(10)->Arg(50);

}  // namespace
}  // namespace polydec

BENCHMARK_MAIN();
