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

// polydec: instance generation, decomposition, marginals, solving and
// benchmarking from the command line.
//
// Exit codes: 0 success, 1 validation failure, 2 infeasible configuration.

#include <CLI11.hpp>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <memory>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_join.h"
#include "polydec/benchmark_runner.h"
#include "polydec/constraint.h"
#include "polydec/extension.h"
#include "polydec/generators.h"
#include "polydec/graph.h"
#include "polydec/graphic.h"
#include "polydec/io.h"
#include "polydec/objectives.h"
#include "polydec/solvers.h"

namespace polydec {
namespace {

using Json = nlohmann::json;

constexpr int kExitValidation = 1;
constexpr int kExitInfeasible = 2;

int ExitCodeFor(const absl::Status& status) {
  if (status.ok()) return 0;
  if (absl::IsFailedPrecondition(status)) return kExitInfeasible;
  return kExitValidation;
}

int Fail(const absl::Status& status) {
  std::cerr << "polydec: " << status.message() << "\n";
  return ExitCodeFor(status);
}

absl::Status Emit(const std::string& out, const std::string& text) {
  if (out.empty() || out == "-") {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
    return absl::OkStatus();
  }
  return WriteFile(out, text);
}

std::vector<double> SplitScales(const std::string& csv) {
  std::vector<double> out;
  absl::StatusOr<std::vector<double>> parsed = ParsePoint(csv);
  if (parsed.ok()) out = *std::move(parsed);
  return out;
}

struct ConstraintFlags {
  std::string constraint = "card";
  int k = 1;
  std::string blocks;
  std::string graph;
  double slack = 0.0;
};

void AddConstraintFlags(CLI::App* app, ConstraintFlags& flags) {
  app->add_option("--constraint", flags.constraint, "card|partition|forest|indset")
      ->check(CLI::IsMember({"card", "partition", "forest", "indset"}));
  app->add_option("--k", flags.k, "cardinality budget");
  app->add_option("--blocks", flags.blocks,
                  "partition blocks JSON {\"blocks\": [...], \"budgets\": [...]}");
  app->add_option("--graph", flags.graph, "graph edge list file");
  app->add_option("--slack", flags.slack, "stable set projection slack");
}

absl::StatusOr<ConstraintSpec> BuildConstraint(const ConstraintFlags& flags) {
  if (flags.constraint == "card") return ConstraintSpec(Cardinality{flags.k});
  if (flags.constraint == "partition") {
    if (flags.blocks.empty()) {
      return absl::InvalidArgumentError("--blocks is required for partition");
    }
    absl::StatusOr<std::string> text = ReadFile(flags.blocks);
    if (!text.ok()) return text.status();
    absl::StatusOr<PartitionMatroid> p = PartitionFromJson(*text);
    if (!p.ok()) return p.status();
    return ConstraintSpec(*std::move(p));
  }
  if (flags.graph.empty()) {
    return absl::InvalidArgumentError(
        absl::StrCat("--graph is required for ", flags.constraint));
  }
  absl::StatusOr<Graph> graph = LoadEdgeList(flags.graph);
  if (!graph.ok()) return graph.status();
  if (flags.constraint == "forest") {
    return ConstraintSpec(GraphicMatroid{*std::move(graph)});
  }
  return ConstraintSpec(FractionalStableSet{*std::move(graph), flags.slack});
}

std::string VertexText(const VertexSet& v) {
  if (v.is_integral()) return absl::StrJoin(v.indices(), " ");
  return absl::StrJoin(v.half_values(), " ", [](std::string* out, double x) {
    absl::StrAppend(out, FormatDouble(x));
  });
}

std::string DecompositionCsv(const Decomposition& d) {
  std::string out = "probability,vertex\n";
  for (const DecompositionPair& pair : d.pairs) {
    absl::StrAppend(&out, FormatDouble(pair.probability), ",",
                    VertexText(pair.vertex), "\n");
  }
  return out;
}

// gen -----------------------------------------------------------------------

struct GenFlags {
  std::string kind = "uniform";
  CoverageGenParams params;
  int nodes = 20;
  double p = 0.15;
  int count = 1;
  uint64_t seed = 0;
  std::string out;
};

int RunGen(const GenFlags& flags) {
  for (int i = 0; i < flags.count; ++i) {
    std::string text;
    if (flags.kind == "er") {
      absl::StatusOr<Graph> g = GenerateErdosRenyi(flags.nodes, flags.p, flags.seed, i);
      if (!g.ok()) return Fail(g.status());
      text = FormatEdgeList(*g);
    } else {
      absl::StatusOr<CoverageInstance> inst =
          flags.kind == "uniform" ? GenerateRandomUniform(flags.params, flags.seed, i)
                                  : GenerateRandomPareto(flags.params, flags.seed, i);
      if (!inst.ok()) return Fail(inst.status());
      text = CoverageToJson(*inst) + "\n";
    }
    std::string out = flags.out;
    if (flags.count > 1 && !out.empty() && out != "-") {
      std::filesystem::path path(out);
      out = (path.parent_path() /
             absl::StrFormat("%s-%04d%s", path.stem().string(), i,
                             path.extension().string()))
                .string();
    }
    if (absl::Status s = Emit(out, text); !s.ok()) return Fail(s);
  }
  return 0;
}

// decompose -----------------------------------------------------------------

struct DecomposeFlags {
  ConstraintFlags constraint;
  std::string point;
  std::string point_file;
  std::string scales = "1";
  double floor = 0.0;
  double epsilon = kDefaultResidualTolerance;
  int max_iter = 0;
  std::string format = "json";
  std::string out;
};

int RunDecompose(const DecomposeFlags& flags) {
  std::string point_text = flags.point;
  if (!flags.point_file.empty()) {
    absl::StatusOr<std::string> text = ReadFile(flags.point_file);
    if (!text.ok()) return Fail(text.status());
    point_text = *text;
  }
  absl::StatusOr<std::vector<double>> x = ParsePoint(point_text);
  if (!x.ok()) return Fail(x.status());
  absl::StatusOr<ConstraintSpec> spec = BuildConstraint(flags.constraint);
  if (!spec.ok()) return Fail(spec.status());
  const std::vector<double> scales = SplitScales(flags.scales);
  if (scales.size() != 1) {
    return Fail(absl::InvalidArgumentError("decompose takes a single --scales value"));
  }
  DecompositionConfig config;
  config.scale = scales[0];
  config.floor = flags.floor;
  config.tolerance = flags.epsilon;
  config.max_iterations = flags.max_iter;
  absl::StatusOr<Decomposition> d = Decompose(*x, *spec, config);
  if (!d.ok()) return Fail(d.status());
  std::string text;
  if (flags.format == "csv") {
    text = DecompositionCsv(*d);
  } else {
    text = DecompositionToJson(*d) + "\n";
  }
  if (absl::Status s = Emit(flags.out, text); !s.ok()) return Fail(s);

  const DecompositionReport report = ValidateDecomposition(*d, *spec, *x);
  const bool passes = config.exact()
                          ? report.ExactPasses(kFeasibilityTolerance)
                          : report.infeasible_pairs.empty() &&
                                report.reconstruction_error <= flags.epsilon + 1e-9;
  if (!passes) {
    std::cerr << "polydec: decomposition failed validation\n"
              << report.DebugString() << "\n";
    return kExitValidation;
  }
  return 0;
}

// marginals -----------------------------------------------------------------

int RunMarginals(const std::string& graph_path, const std::string& out) {
  absl::StatusOr<Graph> graph = LoadEdgeList(graph_path);
  if (!graph.ok()) return Fail(graph.status());
  std::vector<double> weights(graph->num_edges());
  for (int e = 0; e < graph->num_edges(); ++e) weights[e] = graph->weight(e);
  absl::StatusOr<std::vector<double>> mu = SpanningTreeMarginals(*graph, weights);
  if (!mu.ok()) return Fail(mu.status());
  Json json = *mu;
  if (absl::Status s = Emit(out, json.dump() + "\n"); !s.ok()) return Fail(s);
  return 0;
}

// solve ---------------------------------------------------------------------

struct SolveFlags {
  ConstraintFlags constraint;
  std::string objective = "coverage";
  std::string instance;
  std::string weights;
  std::string method = "direct+local";
  int steps = 150;
  double lr = 0.015;
  std::string scales;
  double floor = 1e-3;
  double epsilon = kDefaultResidualTolerance;
  int64_t trials = 10000;
  double seconds = 0.0;
  uint64_t seed = 0;
  std::string format = "json";
  std::string out;
};

int RunSolve(const SolveFlags& flags) {
  absl::StatusOr<ConstraintSpec> spec = BuildConstraint(flags.constraint);
  if (!spec.ok()) return Fail(spec.status());

  std::unique_ptr<SetObjective> f;
  std::optional<CoverageInstance> coverage;
  std::optional<Graph> cut_graph;
  int dimension = 0;
  if (flags.objective == "coverage") {
    absl::StatusOr<std::string> text = ReadFile(flags.instance);
    if (!text.ok()) return Fail(text.status());
    absl::StatusOr<CoverageInstance> inst = CoverageFromJson(*text);
    if (!inst.ok()) return Fail(inst.status());
    coverage = *std::move(inst);
    dimension = coverage->num_sets;
    f = std::make_unique<CoverageObjective>(*coverage);
  } else if (flags.objective == "cut") {
    absl::StatusOr<Graph> g = LoadEdgeList(flags.instance);
    if (!g.ok()) return Fail(g.status());
    cut_graph = *std::move(g);
    dimension = cut_graph->num_nodes;
    f = std::make_unique<CutObjective>(*cut_graph);
  } else {
    absl::StatusOr<std::vector<double>> c = ParsePoint(flags.weights);
    if (!c.ok()) return Fail(c.status());
    dimension = static_cast<int>(c->size());
    f = std::make_unique<LinearObjective>(*std::move(c));
  }
  if (absl::Status s = ValidateConstraint(*spec, dimension); !s.ok()) return Fail(s);

  MethodSettings settings;
  settings.optimize.steps = flags.steps;
  settings.optimize.adam.learning_rate = flags.lr;
  if (!flags.scales.empty()) settings.schedule.scales = SplitScales(flags.scales);
  settings.schedule.floor = flags.floor;
  settings.schedule.tolerance = flags.epsilon;
  settings.random = {flags.trials, flags.seconds};
  absl::StatusOr<SolveResult> result =
      RunMethod(flags.method, *f, *spec, dimension, settings, flags.seed,
                coverage ? &*coverage : nullptr);
  if (!result.ok()) return Fail(result.status());

  std::string text;
  if (flags.format == "csv") {
    BenchmarkRow row{flags.instance.empty() ? "linear" : flags.instance,
                     result->method,
                     flags.constraint.k,
                     result->objective,
                     result->extension,
                     result->time_ms,
                     flags.seed,
                     result->iterations};
    text = FormatCsv(std::span<const BenchmarkRow>(&row, 1));
  } else {
    Json json;
    json["method"] = result->method;
    json["objective"] = result->objective;
    json["extension"] = result->extension;
    json["set"] = result->best.indices();
    json["time_ms"] = result->time_ms;
    json["iterations"] = result->iterations;
    json["seed"] = flags.seed;
    text = json.dump() + "\n";
  }
  if (absl::Status s = Emit(flags.out, text); !s.ok()) return Fail(s);
  return 0;
}

// bench ---------------------------------------------------------------------

struct BenchFlags {
  std::string config;
  std::string out;
  std::string plot_dir;
  int threads = 0;
};

int RunBench(const BenchFlags& flags) {
  absl::StatusOr<std::string> text = ReadFile(flags.config);
  if (!text.ok()) return Fail(text.status());
  const std::string base =
      std::filesystem::path(flags.config).parent_path().string();
  absl::StatusOr<BenchmarkConfig> config =
      ParseBenchmarkConfig(*text, base.empty() ? "." : base);
  if (!config.ok()) return Fail(config.status());
  if (flags.threads > 0) config->threads = flags.threads;
  if (!flags.plot_dir.empty()) config->plot_dir = flags.plot_dir;
  absl::StatusOr<BenchmarkReport> report = RunBenchmark(*config);
  if (!report.ok()) return Fail(report.status());
  if (absl::Status s = Emit(flags.out, FormatCsv(report->rows)); !s.ok()) {
    return Fail(s);
  }
  std::cerr << FormatSummary(report->summary);
  if (!config->plot_dir.empty()) {
    if (absl::Status s = WritePlotData(*report, config->plot_dir); !s.ok()) {
      return Fail(s);
    }
  }
  return 0;
}

int Main(int argc, char** argv) {
  CLI::App app{"Caratheodory decompositions and extension-based set optimization"};
  app.require_subcommand(1);

  GenFlags gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "generate instances");
  gen_cmd->add_option("kind", gen.kind, "uniform|pareto|er")
      ->check(CLI::IsMember({"uniform", "pareto", "er"}));
  gen_cmd->add_option("--sets", gen.params.num_sets, "number of covering sets");
  gen_cmd->add_option("--elements", gen.params.num_elements, "number of elements");
  gen_cmd->add_option("--min-degree", gen.params.min_degree);
  gen_cmd->add_option("--max-degree", gen.params.max_degree);
  gen_cmd->add_option("--nodes", gen.nodes, "ER graph nodes");
  gen_cmd->add_option("--p", gen.p, "ER edge probability");
  gen_cmd->add_option("--count", gen.count, "instances to generate");
  gen_cmd->add_option("--seed", gen.seed);
  gen_cmd->add_option("--out", gen.out,
                      "output path; with --count > 1 a -NNNN suffix is added");

  DecomposeFlags dec;
  CLI::App* dec_cmd = app.add_subcommand("decompose", "decompose a point");
  AddConstraintFlags(dec_cmd, dec.constraint);
  dec_cmd->add_option("--point", dec.point, "comma separated values or JSON list");
  dec_cmd->add_option("--point-file", dec.point_file);
  dec_cmd->add_option("--scales", dec.scales, "scaling factor b");
  dec_cmd->add_option("--floor", dec.floor);
  dec_cmd->add_option("--epsilon", dec.epsilon, "residual tolerance");
  dec_cmd->add_option("--max-iter", dec.max_iter);
  dec_cmd->add_option("--format", dec.format)->check(CLI::IsMember({"json", "csv"}));
  dec_cmd->add_option("--out", dec.out);

  std::string marginals_graph, marginals_out;
  CLI::App* marg_cmd =
      app.add_subcommand("marginals", "weighted spanning-tree edge marginals");
  marg_cmd->add_option("--graph", marginals_graph, "graph edge list")->required();
  marg_cmd->add_option("--out", marginals_out);

  SolveFlags solve;
  CLI::App* solve_cmd = app.add_subcommand("solve", "maximize a set objective");
  AddConstraintFlags(solve_cmd, solve.constraint);
  solve_cmd->add_option("--objective", solve.objective, "coverage|cut|linear")
      ->check(CLI::IsMember({"coverage", "cut", "linear"}));
  solve_cmd->add_option("--instance", solve.instance,
                        "coverage JSON or graph edge list");
  solve_cmd->add_option("--weights", solve.weights, "linear coefficients");
  solve_cmd->add_option("--method", solve.method,
                        "greedy|random|random+decomp|direct|direct+multiscale|"
                        "direct+local");
  solve_cmd->add_option("--steps", solve.steps);
  solve_cmd->add_option("--lr", solve.lr);
  solve_cmd->add_option("--scales", solve.scales, "multi-scale factors");
  solve_cmd->add_option("--floor", solve.floor);
  solve_cmd->add_option("--epsilon", solve.epsilon);
  solve_cmd->add_option("--trials", solve.trials, "random baseline trials");
  solve_cmd->add_option("--seconds", solve.seconds, "random baseline time budget");
  solve_cmd->add_option("--seed", solve.seed);
  solve_cmd->add_option("--format", solve.format)->check(CLI::IsMember({"json", "csv"}));
  solve_cmd->add_option("--out", solve.out);

  BenchFlags bench;
  CLI::App* bench_cmd = app.add_subcommand("bench", "run a benchmark config");
  bench_cmd->add_option("config", bench.config, "benchmark JSON config")->required();
  bench_cmd->add_option("--out", bench.out, "results CSV");
  bench_cmd->add_option("--plot-dir", bench.plot_dir);
  bench_cmd->add_option("--threads", bench.threads);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  }
  if (gen_cmd->parsed()) return RunGen(gen);
  if (dec_cmd->parsed()) return RunDecompose(dec);
  if (marg_cmd->parsed()) return RunMarginals(marginals_graph, marginals_out);
  if (solve_cmd->parsed()) return RunSolve(solve);
  return RunBench(bench);
}

}  // namespace
}  // namespace polydec

int main(int argc, char** argv) { return polydec::Main(argc, argv); }
