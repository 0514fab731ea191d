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

// Python bindings for the core library, exposed as dbmis._core.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "dbmis/bmatching.h"
#include "dbmis/branching.h"
#include "dbmis/cli.h"
#include "dbmis/experiment.h"
#include "dbmis/generators.h"
#include "dbmis/io.h"
#include "dbmis/parity.h"
#include "dbmis/pcforest.h"
#include "dbmis/solvers.h"

namespace py = pybind11;

namespace dbmis {
namespace {

std::vector<ColoredEdge> ToEdges(
    const std::vector<std::tuple<int, int, int, Weight>>& edges) {
  std::vector<ColoredEdge> out;
  for (const auto& [u, v, c, w] : edges) out.push_back({u, v, c, w});
  return out;
}

std::vector<Hyperedge> ToHyperedges(
    const std::vector<std::pair<std::vector<int>, int>>& hyperedges) {
  std::vector<Hyperedge> out;
  for (const auto& [members, bound] : hyperedges) {
    out.push_back({members, bound < 0 ? kUnbounded : bound});
  }
  return out;
}

py::dict SolutionDict(const Solution& s) {
  py::dict d;
  d["kind"] = s.kind;
  d["solver"] = s.solver;
  d["items"] = s.items;
  d["weight"] = s.weight;
  if (s.has_lifted) d["lifted"] = s.lifted;
  return d;
}

py::tuple RunCliCapture(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  int code;
  {
    py::gil_scoped_release release;
    code = RunCli(args, out, err);
  }
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace
}  // namespace dbmis

PYBIND11_MODULE(_core, m) {
  using namespace dbmis;
  m.doc() = "Degree bounded matroid independent sets: solvers, reductions "
            "and exact oracles.";

  py::register_exception<InvalidArgument>(m, "InvalidArgument",
                                          PyExc_ValueError);
  py::register_exception<ContractViolation>(m, "ContractViolation",
                                            PyExc_RuntimeError);
  py::register_exception<ResourceLimit>(m, "ResourceLimit",
                                        PyExc_RuntimeError);
  m.attr("UNBOUNDED") = -1;

  py::class_<MatroidOracle>(m, "Matroid")
      .def_property_readonly("kind",
                             [](const MatroidOracle& o) {
                               return std::string(MatroidKindName(o.kind()));
                             })
      .def_property_readonly("ground", &MatroidOracle::ground)
      .def("is_independent",
           [](const MatroidOracle& o, const std::vector<int>& s) {
             return o.IsIndependent(s);
           })
      .def("rank", [](const MatroidOracle& o, const std::vector<int>& s) {
        return o.Rank(s);
      });

  m.def("graphic_matroid",
        [](int vertices, const std::vector<std::pair<int, int>>& edges) {
          return MakeGraphic(vertices, edges);
        },
        py::arg("vertices"), py::arg("edges"));
  m.def("uniform_matroid",
        [](const std::vector<int>& ground, int rank) {
          return MakeUniform(ToElementSet(ground), rank);
        },
        py::arg("ground"), py::arg("rank"));
  m.def("free_matroid",
        [](const std::vector<int>& ground) {
          return MakeFree(ToElementSet(ground));
        },
        py::arg("ground"));
  m.def("partition_matroid",
        [](const std::vector<std::vector<int>>& parts,
           const std::vector<int>& capacities) {
          std::vector<ElementSet> sets;
          for (const auto& p : parts) sets.push_back(ToElementSet(p));
          return MakePartition(std::move(sets), capacities);
        },
        py::arg("parts"), py::arg("capacities"));
  m.def("direct_sum", &MakeDirectSum, py::arg("children"));

  py::class_<DbmisInstance>(m, "DbmisInstance")
      .def(py::init([](const MatroidOracle& matroid,
                       const std::vector<std::pair<std::vector<int>, int>>& h,
                       const std::vector<Weight>& weights) {
             return DbmisInstance(matroid, ToHyperedges(h), weights);
           }),
           py::arg("matroid"), py::arg("hyperedges"),
           py::arg("weights") = std::vector<Weight>{})
      .def_property_readonly("ground", &DbmisInstance::ground)
      .def_property_readonly("degree", &DbmisInstance::degree)
      .def_property_readonly("weights", &DbmisInstance::weights)
      .def("is_feasible",
           [](const DbmisInstance& i, const std::vector<int>& s) {
             return i.IsFeasible(s);
           })
      .def("total_weight",
           [](const DbmisInstance& i, const std::vector<int>& s) {
             return i.TotalWeight(s);
           })
      .def("to_text", [](const DbmisInstance& i) { return RenderInstance(i); });

  m.def("solve_exact",
        [](const DbmisInstance& i, int max_items) {
          return SolveExact(i, ExactOptions{max_items});
        },
        py::arg("instance"), py::arg("max_items") = ExactOptions{}.max_items);
  m.def("solve_greedy", &SolveGreedy, py::arg("instance"));
  m.def("solve_p_exchange",
        [](const DbmisInstance& i, int p) {
          return SolvePExchange(i, {p, std::nullopt});
        },
        py::arg("instance"), py::arg("p") = 1);
  m.def("solve_via_parity",
        [](const DbmisInstance& i, int t) { return SolveViaParity(i, t); },
        py::arg("instance"), py::arg("t") = 1);
  m.def("parity_round_trip",
        [](const DbmisInstance& i, const std::vector<int>& feasible) {
          ReductionCertificate cert = ReduceDbmisToParity(i);
          std::vector<int> pushed = PushSolution(cert, feasible);
          return py::make_tuple(pushed, LiftSolution(cert, pushed),
                                cert.target.k());
        },
        py::arg("instance"), py::arg("feasible"),
        "Push a feasible set to the parity instance and lift it back; returns "
        "(set indices, lifted elements, k).");

  py::class_<EdgeColoredMultigraph>(m, "EdgeColoredGraph")
      .def(py::init([](int vertices, int colors,
                       const std::vector<std::tuple<int, int, int, Weight>>& e) {
             return EdgeColoredMultigraph(vertices, colors, ToEdges(e));
           }),
           py::arg("vertices"), py::arg("colors"), py::arg("edges"),
           "Edges are (u, v, color, weight) tuples; all bounds are 1.")
      .def_property_readonly("edge_count", &EdgeColoredMultigraph::edge_count)
      .def("to_text",
           [](const EdgeColoredMultigraph& g) { return RenderInstance(g); });

  m.def("algorithm1",
        [](const EdgeColoredMultigraph& g) {
          return LocalSearchForestWithBundles(g).edges();
        },
        py::arg("graph"));
  m.def("small_colors",
        [](const EdgeColoredMultigraph& g) { return SmallColors(g).edges(); },
        py::arg("graph"));
  m.def("solve_bundled_exact",
        [](const EdgeColoredMultigraph& g) { return SolveBundledExact(g); },
        py::arg("graph"));
  m.def("solve_gpf_exact",
        [](const EdgeColoredMultigraph& g) { return SolveGpfExact(g); },
        py::arg("graph"));
  m.def("reduce_gpf_to_dbmis", &ReduceGpfToDbmis, py::arg("graph"));

  m.def("bench",
        [](const std::string& suite, int trials, std::uint64_t seed, int jobs,
           const std::string& format) {
          ExperimentReport r;
          {
            py::gil_scoped_release release;
            r = RunRatioSuite({suite, trials, seed, jobs});
          }
          py::dict d;
          d["violations"] = r.violations;
          d["text"] = format == "csv" ? RenderReportCsv(r) : RenderReportText(r);
          py::list summaries;
          for (const SolverSummary& s : r.summaries) {
            py::dict x;
            x["solver"] = s.solver;
            x["rows"] = s.rows;
            x["min_ratio"] = s.min_ratio.ToString();
            x["mean_ratio"] = s.mean_ratio.ToString();
            x["violations"] = s.violations;
            summaries.append(x);
          }
          d["summaries"] = summaries;
          return d;
        },
        py::arg("suite"), py::arg("trials") = 100, py::arg("seed") = 1,
        py::arg("jobs") = 1, py::arg("format") = "text");
  m.def("suite_names", &SuiteNames);

  m.def("parse_solution",
        [](const std::string& text) { return SolutionDict(ParseSolution(text)); },
        py::arg("text"));
  m.def("instance_kind",
        [](const std::string& text) {
          return std::string(InstanceKind(ParseInstance(text).instance));
        },
        py::arg("text"));
  m.def("run_cli", &RunCliCapture, py::arg("args"),
        "Run the command-line tool; returns (exit code, stdout, stderr).");
}
