// Copyright 2026 The Authors.
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

#include "dbmis/cli.h"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "dbmis/experiment.h"
#include "dbmis/generators.h"
#include "dbmis/io.h"
#include "dbmis/solvers.h"

namespace dbmis {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string ReadInput(const std::string& path) {
  std::ostringstream os;
  if (path == "-") {
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  os << in.rdbuf();
  return os.str();
}

void WriteOutput(const std::string& path, const std::string& text,
                 std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InvalidArgument("cannot write '" + path + "'");
  file << text;
  if (!file) throw InvalidArgument("write to '" + path + "' failed");
}

// Options shared by the subcommands; filled by CLI11.
struct Options {
  // gen
  std::string kind = "ecgraph";
  std::uint64_t seed = 1;
  int vertices = 4;
  int edges = 6;
  int colors = 2;
  double parallel_prob = 0.0;
  std::string bounds = "unit";
  Weight max_weight = 1;
  Weight min_weight = 1;
  int elements = 6;
  int max_degree = 2;
  int hyperedges = 4;
  bool unit_bounds = false;
  std::string matroid = "any";
  // solve / oracle / reduce
  std::string input;
  std::string output;
  std::string alg;
  int p = 1;
  int t = 1;
  int removal_cap = -1;
  int max_items = ExactOptions{}.max_items;
  bool bundles = false;
  std::string mode = "colored";
  std::string from;
  // bench
  std::string suite;
  int trials = 100;
  int jobs = 1;
  std::string format = "text";
};

std::string RunGen(const Options& o) {
  BoundMode bounds = o.bounds == "random" ? BoundMode::kRandom : BoundMode::kUnit;
  EcGraphParams ec;
  ec.vertices = o.vertices;
  ec.edges = o.edges;
  ec.colors = o.colors;
  ec.parallel_prob = o.parallel_prob;
  ec.bounds = bounds;
  ec.max_weight = o.max_weight;
  if (o.kind == "ecgraph") return RenderInstance(GenEcGraph(o.seed, ec));
  if (o.kind == "bmatching") return RenderInstance(GenBMatching(o.seed, ec));
  if (o.kind == "digraph") {
    DigraphParams d;
    d.vertices = o.vertices;
    d.arcs = o.edges;
    d.colors = o.colors;
    d.bounds = bounds;
    d.max_weight = o.max_weight;
    return RenderInstance(GenDigraph(o.seed, d));
  }
  DbmisParams d;
  d.elements = o.elements;
  d.max_degree = o.max_degree;
  d.hyperedges = o.hyperedges;
  d.unit_bounds = o.unit_bounds;
  d.min_weight = o.min_weight;
  d.max_weight = o.max_weight;
  static const std::map<std::string, MatroidChoice> kChoices = {
      {"any", MatroidChoice::kAny},         {"graphic", MatroidChoice::kGraphic},
      {"uniform", MatroidChoice::kUniform}, {"partition", MatroidChoice::kPartition},
      {"free", MatroidChoice::kFree}};
  d.matroid = kChoices.at(o.matroid);
  return RenderInstance(GenDbmis(o.seed, d));
}

// Applies the file's mapping (item here -> item in the source) to `items`.
std::vector<int> Lift(const InstanceFile& file, const ElementSet& items) {
  std::map<int, int> source_of(file.mapping.begin(), file.mapping.end());
  std::vector<int> lifted;
  for (int x : items) {
    auto it = source_of.find(x);
    if (it == source_of.end()) {
      throw InvalidArgument("mapping has no entry for item " +
                            std::to_string(x));
    }
    lifted.push_back(it->second);
  }
  std::sort(lifted.begin(), lifted.end());
  return lifted;
}

ElementSet SolveDbmisWith(const DbmisInstance& inst, const Options& o) {
  ExactOptions exact{o.max_items};
  if (o.alg == "exact") return SolveExact(inst, exact);
  if (o.alg == "greedy") return SolveGreedy(inst);
  if (o.alg == "via-parity") return SolveViaParity(inst, o.t);
  if (o.alg == "p-exchange") {
    PExchangeOptions opts;
    opts.p = o.p;
    if (o.removal_cap >= 0) opts.removal_cap = o.removal_cap;
    return SolvePExchange(inst, opts);
  }
  throw UsageError("solver '" + o.alg + "' does not apply to dbmis instances");
}

BranchingMode ParseMode(const std::string& mode) {
  return mode == "out-colored" ? BranchingMode::kOutColored
                               : BranchingMode::kColored;
}

Solution Solve(const InstanceFile& file, const Options& o) {
  Solution s;
  s.kind = InstanceKind(file.instance);
  s.solver = o.alg;
  ExactOptions exact{o.max_items};
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, DbmisInstance>) {
          s.items = SolveDbmisWith(x, o);
          s.weight = x.TotalWeight(s.items);
        } else if constexpr (std::is_same_v<T, EdgeColoredMultigraph>) {
          if (o.alg == "algorithm1") {
            s.items = LocalSearchForestWithBundles(x).edges();
          } else if (o.alg == "small-colors") {
            s.items = SmallColors(x).edges();
          } else if (o.alg == "exact") {
            s.items = o.bundles ? SolveBundledExact(x, exact)
                                : SolveGpfExact(x, exact);
          } else {
            s.items = SolveDbmisWith(ReduceGpfToDbmis(x), o);
          }
          s.weight = x.TotalWeight(s.items);
        } else if constexpr (std::is_same_v<T, ColoredDigraph>) {
          if (o.alg == "exact") {
            s.items = SolveBranchingExact(x, ParseMode(o.mode), exact);
          } else {
            s.items = SolveDbmisWith(ReduceColoredBranchingToDbmis(x), o);
          }
          s.weight = x.TotalWeight(s.items);
        } else if constexpr (std::is_same_v<T, BMatchingInstance>) {
          if (o.alg != "exact") {
            throw UsageError("bmatching instances support only --alg exact");
          }
          s.items = SolveBMatchingExact(x, exact);
          s.weight = x.graph.TotalWeight(s.items);
        } else if constexpr (std::is_same_v<T, HierarchicalBMatchingInstance>) {
          if (o.alg != "exact") {
            throw UsageError("hierarchical instances support only --alg exact");
          }
          s.items = SolveHierarchicalExact(x, exact);
          s.weight = x.TotalWeight(s.items);
        } else if constexpr (std::is_same_v<T, ParityInstance>) {
          std::vector<int> chosen;
          if (o.alg == "exact") {
            chosen = SolveParityExact(x, exact);
          } else if (o.alg == "greedy") {
            chosen = SolveParityGreedy(x);
          } else if (o.alg == "local") {
            chosen = SolveParityLocal(x, o.t);
          } else {
            throw UsageError("parity instances support --alg exact, greedy or "
                             "local");
          }
          s.items = ToElementSet(chosen);
          s.weight = x.TotalWeight(s.items);
        }
      },
      file.instance);
  if (!file.mapping.empty()) {
    s.lifted = Lift(file, s.items);
    s.has_lifted = true;
  }
  return s;
}

std::vector<std::pair<int, int>> Identity(int n) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n; ++i) out.emplace_back(i, i);
  return out;
}

std::string Reduce(const InstanceFile& file, const std::string& from) {
  InstanceFile result;
  if (from == "gpf") {
    const auto* g = std::get_if<EdgeColoredMultigraph>(&file.instance);
    if (!g) throw InvalidArgument("--from gpf needs an ecgraph instance");
    result.instance = ReduceGpfToDbmis(*g);
    result.mapping = Identity(g->edge_count());
  } else if (from == "dbmis") {
    const auto* d = std::get_if<DbmisInstance>(&file.instance);
    if (!d) throw InvalidArgument("--from dbmis needs a dbmis instance");
    ReductionCertificate cert = ReduceDbmisToParity(*d);
    for (std::size_t j = 0; j < cert.element_of.size(); ++j) {
      result.mapping.emplace_back(static_cast<int>(j), cert.element_of[j]);
    }
    result.roles = cert.roles;
    result.instance = std::move(cert.target);
  } else if (from == "branching") {
    const auto* d = std::get_if<ColoredDigraph>(&file.instance);
    if (!d) throw InvalidArgument("--from branching needs a digraph instance");
    result.instance = ReduceColoredBranchingToDbmis(*d);
    result.mapping = Identity(d->arc_count());
  } else if (from == "bmatch") {
    const auto* b = std::get_if<BMatchingInstance>(&file.instance);
    if (!b) throw InvalidArgument("--from bmatch needs a bmatching instance");
    HierarchicalReduction h = ReduceBMatchingToHierarchical(*b);
    result.mapping = Identity(b->graph.edge_count());
    result.copies = std::move(h.copies);
    result.instance = std::move(h.target);
  }
  // A chained reduction maps straight back to the original items.
  if (!file.mapping.empty()) {
    std::map<int, int> source_of(file.mapping.begin(), file.mapping.end());
    for (auto& [item, source] : result.mapping) {
      auto it = source_of.find(source);
      if (it != source_of.end()) source = it->second;
    }
  }
  return RenderInstance(result);
}

const char* kDescription =
    "Degree bounded matroid independent sets: generators, solvers, "
    "reductions, exact oracles and ratio benchmarks.\n"
    "All randomness is controlled by --seed (SplitMix64).";

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  Options o;
  CLI::App app{kDescription, "dbmis"};
  app.require_subcommand(1, 1);
  app.set_help_all_flag("--help-all", "Show help for all subcommands");

  CLI::App* gen = app.add_subcommand("gen", "Emit a random instance file");
  gen->add_option("--kind", o.kind, "Instance kind")
      ->check(CLI::IsMember({"ecgraph", "dbmis", "digraph", "bmatching"}))
      ->capture_default_str();
  gen->add_option("--seed", o.seed, "64-bit seed")->capture_default_str();
  gen->add_option("--vertices,-n", o.vertices, "Vertices (graph kinds)")
      ->capture_default_str();
  gen->add_option("--edges,-m", o.edges, "Edges or arcs (graph kinds)")
      ->capture_default_str();
  gen->add_option("--colors,-k", o.colors, "Colors (graph kinds)")
      ->capture_default_str();
  gen->add_option("--parallel-prob", o.parallel_prob,
                  "Probability of reusing a vertex pair (ecgraph, bmatching)")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  gen->add_option("--bounds", o.bounds, "Color bounds: unit or random in [0,2]")
      ->check(CLI::IsMember({"unit", "random"}))
      ->capture_default_str();
  gen->add_option("--min-weight", o.min_weight, "Minimum weight (dbmis)")
      ->capture_default_str();
  gen->add_option("--max-weight", o.max_weight, "Maximum weight")
      ->capture_default_str();
  gen->add_option("--elements", o.elements, "Ground set size (dbmis)")
      ->capture_default_str();
  gen->add_option("--max-degree", o.max_degree,
                  "Maximum hyperedges per element (dbmis)")
      ->capture_default_str();
  gen->add_option("--hyperedges", o.hyperedges, "Hyperedge slots (dbmis)")
      ->capture_default_str();
  gen->add_flag("--unit-bounds", o.unit_bounds,
                "Hyperedge bounds in {0,1} (dbmis)");
  gen->add_option("--matroid", o.matroid, "Matroid kind (dbmis)")
      ->check(CLI::IsMember({"any", "graphic", "uniform", "partition", "free"}))
      ->capture_default_str();
  gen->add_option("--out,-o", o.output, "Output file (default stdout)");

  CLI::App* solve = app.add_subcommand(
      "solve", "Solve an instance file and print a solution file");
  solve->add_option("input", o.input, "Instance file, '-' for stdin")
      ->required();
  solve
      ->add_option(
          "--alg", o.alg,
          "algorithm1 | small-colors (ecgraph); greedy | p-exchange | "
          "via-parity | exact (dbmis, or ecgraph/digraph via their "
          "reductions); local | greedy | exact (parity); exact (bmatching, "
          "hierarchical)")
      ->required()
      ->check(CLI::IsMember({"algorithm1", "small-colors", "greedy",
                             "p-exchange", "via-parity", "exact", "local"}));
  solve
      ->add_option("--p", o.p,
                   "p-exchange move size; p = ceil(1/eps) gives a "
                   "1/(Delta+eps) approximation")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  solve
      ->add_option("--removal-cap", o.removal_cap,
                   "p-exchange removal cap (default p*Delta+1)");
  solve
      ->add_option("--t", o.t,
                   "Sets exchanged per parity local-search move")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  solve->add_option("--max-items", o.max_items, "Exact solver size cap")
      ->capture_default_str();
  solve->add_flag("--bundles", o.bundles,
                  "Exact ecgraph optimum over forests with bundles");
  solve->add_option("--mode", o.mode, "Digraph color mode")
      ->check(CLI::IsMember({"colored", "out-colored"}))
      ->capture_default_str();
  solve->add_option("--out,-o", o.output, "Output file (default stdout)");

  CLI::App* reduce = app.add_subcommand(
      "reduce", "Reduce an instance; the output carries the item mapping");
  reduce->add_option("input", o.input, "Instance file, '-' for stdin")
      ->required();
  reduce->add_option("--from", o.from, "gpf | dbmis | branching | bmatch")
      ->required()
      ->check(CLI::IsMember({"gpf", "dbmis", "branching", "bmatch"}));
  reduce->add_option("--out,-o", o.output, "Output file (default stdout)");

  CLI::App* oracle =
      app.add_subcommand("oracle", "Exact optimum by enumeration");
  oracle->add_option("input", o.input, "Instance file, '-' for stdin")
      ->required();
  oracle->add_option("--max-items", o.max_items, "Size cap")
      ->capture_default_str();
  oracle->add_flag("--bundles", o.bundles,
                   "ecgraph: optimum over forests with bundles");
  oracle->add_option("--mode", o.mode, "Digraph color mode")
      ->check(CLI::IsMember({"colored", "out-colored"}))
      ->capture_default_str();
  oracle->add_option("--out,-o", o.output, "Output file (default stdout)");

  CLI::App* bench =
      app.add_subcommand("bench", "Approximation ratios against exact optima");
  std::vector<std::string> suites = SuiteNames();
  bench->add_option("--suite", o.suite, "Suite name")
      ->required()
      ->check(CLI::IsMember(suites));
  bench->add_option("--trials", o.trials, "Number of random instances")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  bench->add_option("--seed", o.seed, "64-bit seed")->capture_default_str();
  bench->add_option("--jobs,-j", o.jobs, "Worker threads")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench->add_option("--format", o.format, "csv or text")
      ->check(CLI::IsMember({"csv", "text"}))
      ->capture_default_str();
  bench->add_option("--out,-o", o.output, "Output file (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gen->parsed()) {
      WriteOutput(o.output, RunGen(o), out);
    } else if (solve->parsed()) {
      InstanceFile file = ParseInstance(ReadInput(o.input));
      WriteOutput(o.output, RenderSolution(Solve(file, o)), out);
    } else if (oracle->parsed()) {
      InstanceFile file = ParseInstance(ReadInput(o.input));
      o.alg = "exact";
      WriteOutput(o.output, RenderSolution(Solve(file, o)), out);
    } else if (reduce->parsed()) {
      InstanceFile file = ParseInstance(ReadInput(o.input));
      WriteOutput(o.output, Reduce(file, o.from), out);
    } else if (bench->parsed()) {
      SuiteOptions suite;
      suite.suite = o.suite;
      suite.trials = o.trials;
      suite.seed = o.seed;
      suite.jobs = o.jobs;
      ExperimentReport report = RunRatioSuite(suite);
      WriteOutput(o.output,
                  o.format == "csv" ? RenderReportCsv(report)
                                    : RenderReportText(report),
                  out);
      if (report.violations > 0) {
        err << "error: " << report.violations
            << " hard-bound violation(s) in suite " << o.suite << '\n';
        return kExitRuntimeError;
      }
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntimeError;
  }
  return kExitOk;
}

}  // namespace dbmis
