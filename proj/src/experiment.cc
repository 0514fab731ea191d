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

#include "dbmis/experiment.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include "dbmis/branching.h"
#include "dbmis/generators.h"
#include "dbmis/pcforest.h"
#include "dbmis/random.h"
#include "dbmis/solvers.h"

namespace dbmis {

namespace {

__int128 Gcd(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::string Int128ToString(__int128 v) {
  if (v == 0) return "0";
  bool negative = v < 0;
  if (negative) v = -v;
  std::string out;
  while (v > 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  if (negative) out.push_back('-');
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace

Rational::Rational(__int128 num, __int128 den) {
  if (den == 0) throw InvalidArgument("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  __int128 g = Gcd(num, den);
  if (g == 0) g = 1;
  num_ = num / g;
  den_ = den / g;
}

Rational Rational::operator+(const Rational& other) const {
  __int128 g = Gcd(den_, other.den_);
  __int128 left = other.den_ / g;
  constexpr __int128 kLimit = static_cast<__int128>(1) << 100;
  if (den_ > kLimit / left) {
    throw ResourceLimit("rational denominator overflow");
  }
  return Rational(num_ * left + other.num_ * (den_ / g), den_ * left);
}

Rational Rational::operator/(__int128 divisor) const {
  return Rational(num_, den_ * divisor);
}

std::string Rational::ToString() const {
  return Int128ToString(num_) + "/" + Int128ToString(den_);
}

double Rational::ToDouble() const {
  return static_cast<double>(num_) / static_cast<double>(den_);
}

namespace {

struct Measurement {
  std::string solver;
  int size = 0;
  Weight weight = 0;
  Weight optimum = 0;
  std::optional<Rational> bound;
};

struct Trial {
  std::string params;
  std::vector<Measurement> measurements;
};

struct SuiteDef {
  std::vector<std::string> solvers;
  std::vector<std::optional<Rational>> targets;
  std::function<Trial(int id, std::uint64_t seed)> run;
};

std::string Params(std::initializer_list<std::pair<const char*, long long>> kv) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, value] : kv) {
    if (!first) os << ' ';
    os << key << '=' << value;
    first = false;
  }
  return os.str();
}

// Random small edge-colored multigraph with at most `max_edges` edges.
EdgeColoredMultigraph RandomGraph(SplitMix64& rng, std::uint64_t seed,
                                  int colors, int max_edges) {
  EcGraphParams p;
  p.vertices = rng.UniformInt(2, 6);
  p.colors = colors;
  long long capacity =
      static_cast<long long>(colors) * p.vertices * (p.vertices - 1) / 2;
  p.edges = rng.UniformInt(0, static_cast<int>(std::min<long long>(
                                  max_edges, capacity)));
  p.parallel_prob = 0.3;
  return GenEcGraph(DeriveSeed(seed, 1), p);
}

Trial ForestTrial(const EdgeColoredMultigraph& g, const char* solver,
                  const BundledForest& f, Rational bound) {
  Trial t;
  t.params = Params({{"n", g.vertex_count()},
                     {"m", g.edge_count()},
                     {"k", g.color_count()}});
  Weight opt = static_cast<Weight>(SolveBundledExact(g).size());
  t.measurements.push_back({solver, f.size(), f.size(), opt, bound});
  return t;
}

SuiteDef MakeSuite(const std::string& name) {
  SuiteDef spec;
  if (name == "greedy") {
    spec.solvers = {"greedy"};
    spec.run = [](int, std::uint64_t seed) {
      SplitMix64 rng(seed);
      DbmisParams p;
      p.elements = rng.UniformInt(1, 10);
      p.max_degree = rng.UniformInt(1, 3);
      p.hyperedges = rng.UniformInt(1, 6);
      DbmisInstance inst = GenDbmis(DeriveSeed(seed, 1), p);
      ElementSet s = SolveGreedy(inst);
      Trial t;
      t.params = Params({{"n", p.elements}, {"delta", inst.degree()}});
      Weight opt = inst.TotalWeight(SolveExact(inst));
      t.measurements.push_back({"greedy", static_cast<int>(s.size()),
                                inst.TotalWeight(s), opt,
                                Rational(1, inst.degree() + 1)});
      return t;
    };
  } else if (name == "exchange") {
    spec.solvers = {"p-exchange"};
    spec.run = [](int id, std::uint64_t seed) {
      SplitMix64 rng(seed);
      DbmisParams p;
      p.elements = rng.UniformInt(1, 10);
      p.max_degree = rng.UniformInt(1, 3);
      p.hyperedges = rng.UniformInt(1, 6);
      p.unit_bounds = true;
      p.max_weight = 5;
      DbmisInstance inst = GenDbmis(DeriveSeed(seed, 1), p);
      PExchangeOptions opts;
      opts.p = 1 + id % 3;
      ElementSet s = SolvePExchange(inst, opts);
      Trial t;
      t.params = Params(
          {{"n", p.elements}, {"delta", inst.degree()}, {"p", opts.p}});
      Weight opt = inst.TotalWeight(SolveExact(inst));
      // 1 / (Delta + 1/p) = p / (p * Delta + 1). An instance without
      // hyperedges also has degree at most 1, which keeps the bound <= 1.
      const int delta = std::max(inst.degree(), 1);
      t.measurements.push_back(
          {"p-exchange", static_cast<int>(s.size()), inst.TotalWeight(s), opt,
           Rational(opts.p, static_cast<__int128>(opts.p) * delta + 1)});
      return t;
    };
  } else if (name == "bundled") {
    spec.solvers = {"algorithm1"};
    spec.run = [](int, std::uint64_t seed) {
      SplitMix64 rng(seed);
      int colors = rng.UniformInt(1, 3);
      EdgeColoredMultigraph g = RandomGraph(rng, seed, colors, 10);
      return ForestTrial(g, "algorithm1", LocalSearchForestWithBundles(g),
                         Rational(1, 3));
    };
  } else if (name == "small-colors-k2" || name == "small-colors-k3") {
    const int colors = name == "small-colors-k2" ? 2 : 3;
    spec.solvers = {"small-colors"};
    spec.run = [colors](int, std::uint64_t seed) {
      SplitMix64 rng(seed);
      EdgeColoredMultigraph g = RandomGraph(rng, seed, colors, 10);
      return ForestTrial(g, "small-colors", SmallColors(g),
                         colors == 2 ? Rational(3, 4) : Rational(1, 2));
    };
  } else if (name == "parity") {
    spec.solvers = {"via-parity"};
    spec.targets = {Rational(33, 50)};
    spec.run = [](int, std::uint64_t seed) {
      SplitMix64 rng(seed);
      DbmisParams p;
      p.elements = rng.UniformInt(4, 14);
      p.max_degree = 2;
      p.hyperedges = rng.UniformInt(3, 8);
      DbmisInstance inst = GenDbmis(DeriveSeed(seed, 1), p);
      ElementSet s = SolveViaParity(inst, 2);
      Trial t;
      t.params = Params({{"n", p.elements}, {"delta", inst.degree()}, {"t", 2}});
      Weight opt = inst.TotalWeight(SolveExact(inst));
      t.measurements.push_back({"via-parity", static_cast<int>(s.size()),
                                inst.TotalWeight(s), opt, Rational(1, 3)});
      return t;
    };
  } else if (name == "branching") {
    spec.solvers = {"greedy", "via-parity"};
    spec.targets = {std::nullopt, Rational(1, 2)};
    spec.run = [](int id, std::uint64_t seed) {
      SplitMix64 rng(seed);
      DigraphParams p;
      p.vertices = rng.UniformInt(2, 5);
      p.arcs = rng.UniformInt(0, 7);
      p.colors = rng.UniformInt(1, 2);
      p.bounds = id % 2 == 0 ? BoundMode::kUnit : BoundMode::kRandom;
      ColoredDigraph d = GenDigraph(DeriveSeed(seed, 1), p);
      DbmisInstance inst = ReduceColoredBranchingToDbmis(d);
      Weight opt = d.TotalWeight(SolveBranchingExact(d, BranchingMode::kColored));
      Trial t;
      t.params = Params({{"n", p.vertices}, {"arcs", p.arcs}, {"k", p.colors}});
      ElementSet greedy = SolveGreedy(inst);
      ElementSet parity = SolveViaParity(inst, 2);
      for (const ElementSet* s : {&greedy, &parity}) {
        if (!IsGProperlyColoredBranching(d, *s, BranchingMode::kColored)) {
          throw ContractViolation("branching suite: solver returned an infeasible "
                                  "branching");
        }
      }
      t.measurements.push_back({"greedy", static_cast<int>(greedy.size()),
                                d.TotalWeight(greedy), opt, Rational(1, 4)});
      t.measurements.push_back({"via-parity", static_cast<int>(parity.size()),
                                d.TotalWeight(parity), opt, std::nullopt});
      return t;
    };
  } else {
    throw InvalidArgument("unknown suite '" + name + "'");
  }
  spec.targets.resize(spec.solvers.size());
  return spec;
}

}  // namespace

std::vector<std::string> SuiteNames() {
  return {"greedy",          "exchange", "bundled", "small-colors-k2",
          "small-colors-k3", "parity",   "branching"};
}

ExperimentReport RunRatioSuite(const SuiteOptions& options) {
  if (options.trials < 0) throw InvalidArgument("trials must be >= 0");
  if (options.jobs < 1) throw InvalidArgument("jobs must be >= 1");
  SuiteDef spec = MakeSuite(options.suite);

  std::vector<Trial> trials(options.trials);
  std::vector<std::uint64_t> seeds(options.trials);
  for (int i = 0; i < options.trials; ++i) {
    seeds[i] = DeriveSeed(options.seed, static_cast<std::uint64_t>(i));
  }
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    while (true) {
      int i = next.fetch_add(1);
      if (i >= options.trials) return;
      try {
        trials[i] = spec.run(i, seeds[i]);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mu);
        if (!failure) failure = std::current_exception();
        next = options.trials;
        return;
      }
    }
  };
  const int jobs = std::min(options.jobs, std::max(options.trials, 1));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (int j = 0; j < jobs; ++j) threads.emplace_back(worker);
    for (std::thread& t : threads) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  ExperimentReport report;
  report.suite = options.suite;
  report.seed = options.seed;
  report.trials = options.trials;
  std::vector<Rational> sums(spec.solvers.size());
  for (std::size_t s = 0; s < spec.solvers.size(); ++s) {
    report.summaries.push_back(
        {spec.solvers[s], 0, Rational(1, 1), Rational(0, 1), 0, spec.targets[s]});
  }
  for (int i = 0; i < options.trials; ++i) {
    for (const Measurement& m : trials[i].measurements) {
      ExperimentRow row;
      row.id = i;
      row.seed = seeds[i];
      row.solver = m.solver;
      row.params = trials[i].params;
      row.size = m.size;
      row.weight = m.weight;
      row.optimum = m.optimum;
      row.ratio = m.optimum == 0 ? Rational(1, 1) : Rational(m.weight, m.optimum);
      row.bound = m.bound;
      row.violation = m.bound.has_value() && row.ratio < *m.bound;
      auto pos = std::find(spec.solvers.begin(), spec.solvers.end(), m.solver) -
                 spec.solvers.begin();
      SolverSummary& summary = report.summaries[pos];
      if (summary.rows == 0 || row.ratio < summary.min_ratio) {
        summary.min_ratio = row.ratio;
      }
      ++summary.rows;
      sums[pos] = sums[pos] + row.ratio;
      if (row.violation) {
        ++summary.violations;
        ++report.violations;
      }
      report.rows.push_back(std::move(row));
    }
  }
  for (std::size_t s = 0; s < spec.solvers.size(); ++s) {
    SolverSummary& summary = report.summaries[s];
    if (summary.rows > 0) summary.mean_ratio = sums[s] / summary.rows;
  }
  return report;
}

std::string RenderReportCsv(const ExperimentReport& report) {
  std::ostringstream os;
  os << "id,seed,solver,params,size,weight,optimum,ratio,bound,violation\n";
  for (const ExperimentRow& r : report.rows) {
    os << r.id << ',' << r.seed << ',' << r.solver << ',' << r.params << ','
       << r.size << ',' << r.weight << ','
       << (r.optimum ? std::to_string(*r.optimum) : "") << ','
       << r.ratio.ToString() << ','
       << (r.bound ? r.bound->ToString() : "") << ','
       << (r.violation ? 1 : 0) << '\n';
  }
  return os.str();
}

std::string RenderReportText(const ExperimentReport& report) {
  std::ostringstream os;
  os << "v1 report\n";
  os << "suite " << report.suite << '\n';
  os << "seed " << report.seed << '\n';
  os << "trials " << report.trials << '\n';
  os << "violations " << report.violations << '\n';
  for (const SolverSummary& s : report.summaries) {
    os << "summary solver=" << s.solver << " rows=" << s.rows
       << " min_ratio=" << s.min_ratio.ToString()
       << " mean_ratio=" << s.mean_ratio.ToString()
       << " violations=" << s.violations;
    if (s.target) {
      os << " target=" << s.target->ToString() << " target_met="
         << (s.rows == 0 || *s.target <= s.min_ratio ? "yes" : "no");
    }
    os << '\n';
  }
  for (const ExperimentRow& r : report.rows) {
    os << "row id=" << r.id << " seed=" << r.seed << " solver=" << r.solver
       << " size=" << r.size << " weight=" << r.weight;
    if (r.optimum) os << " optimum=" << *r.optimum;
    os << " ratio=" << r.ratio.ToString();
    if (r.bound) os << " bound=" << r.bound->ToString();
    os << " violation=" << (r.violation ? 1 : 0) << " params=\"" << r.params
       << "\"\n";
  }
  return os.str();
}

}  // namespace dbmis
