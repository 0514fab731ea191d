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

#include "dbmis/io.h"

#include <string>
#include <vector>

#include "dbmis/generators.h"
#include "doctest.h"

namespace dbmis {
namespace {

// Round trip through text; the rendering of the parsed value must match
// byte for byte.
void CheckRoundTrip(const InstanceFile& file) {
  const std::string text = RenderInstance(file);
  InstanceFile parsed = ParseInstance(text);
  CHECK(std::string(InstanceKind(parsed.instance)) ==
        InstanceKind(file.instance));
  CHECK(RenderInstance(parsed) == text);
  CHECK(parsed.mapping == file.mapping);
  CHECK(parsed.roles.size() == file.roles.size());
  CHECK(parsed.copies.size() == file.copies.size());
}

TEST_CASE("every instance kind round-trips") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    EcGraphParams ec;
    ec.vertices = 4;
    ec.edges = static_cast<int>(seed % 7);
    ec.colors = 2;
    ec.parallel_prob = 0.3;
    ec.bounds = seed % 2 ? BoundMode::kRandom : BoundMode::kUnit;
    ec.max_weight = 3;
    EdgeColoredMultigraph g = GenEcGraph(seed, ec);
    CheckRoundTrip({g, {}, {}, {}});

    BMatchingInstance b = GenBMatching(seed, ec);
    CheckRoundTrip({b, {}, {}, {}});
    HierarchicalReduction h = ReduceBMatchingToHierarchical(b);
    CheckRoundTrip({h.target, {{0, 0}}, {}, h.copies});

    DigraphParams dp;
    dp.arcs = static_cast<int>(seed % 6);
    dp.bounds = ec.bounds;
    CheckRoundTrip({GenDigraph(seed, dp), {}, {}, {}});

    DbmisParams p;
    p.elements = static_cast<int>(seed % 7);
    p.max_weight = 4;
    DbmisInstance inst = GenDbmis(seed, p);
    CheckRoundTrip({inst, {}, {}, {}});
    ReductionCertificate cert = ReduceDbmisToParity(inst);
    std::vector<std::pair<int, int>> mapping;
    for (std::size_t j = 0; j < cert.element_of.size(); ++j) {
      mapping.emplace_back(static_cast<int>(j), cert.element_of[j]);
    }
    CheckRoundTrip({cert.target, mapping, cert.roles, {}});
    CheckRoundTrip({ReduceGpfToDbmis(g), {}, {}, {}});
  }
}

TEST_CASE("parsed instances behave like the originals") {
  DbmisParams p;
  p.elements = 6;
  p.max_weight = 5;
  DbmisInstance inst = GenDbmis(42, p);
  InstanceFile parsed = ParseInstance(RenderInstance(inst));
  const DbmisInstance& back = std::get<DbmisInstance>(parsed.instance);
  CHECK(back.weights() == inst.weights());
  for (std::uint64_t mask = 0; mask < 64; ++mask) {
    std::vector<int> s;
    for (int i = 0; i < 6; ++i) {
      if (mask >> i & 1) s.push_back(i);
    }
    CHECK(back.IsFeasible(s) == inst.IsFeasible(s));
  }
}

TEST_CASE("matroid blocks of every kind") {
  const std::vector<std::pair<int, int>> edges = {{0, 1}, {1, 2}};
  MatroidOracle m = MakeDirectSum(
      {MakeCopy(MakeGraphic(3, edges), {11, 10}),
       MakeRestriction(MakeUniform({0, 1, 2}, 2), {0, 2}),
       MakePartition({3, 4, 5}, {{3, 4}}, {kUnbounded}), MakeFree({6})});
  DbmisInstance inst(m, {{{0, 3}, 1}});
  const std::string text = RenderInstance(inst);
  CHECK(text.find("copy 2 11 10") != std::string::npos);
  CHECK(text.find("partition 3 3 4 5") != std::string::npos);
  CHECK(text.find("-1 2 3 4") != std::string::npos);
  CHECK(RenderInstance(ParseInstance(text)) == text);
  CHECK(RenderMatroid(MakeFree({1, 2})) == "free 2 1 2\n");
}

TEST_CASE("comments and whitespace are ignored") {
  const std::string text =
      "# header comment\n"
      "v1 ecgraph   # trailing\n"
      "vertices 2\ncolors 1\n\nedges 1\n0   1 0 5\n"
      "default_bound 1\nbounds 0\n";
  InstanceFile f = ParseInstance(text);
  const auto& g = std::get<EdgeColoredMultigraph>(f.instance);
  CHECK(g.edge_count() == 1);
  CHECK(g.edge(0).weight == 5);
}

TEST_CASE("malformed input is rejected with a line number") {
  const std::vector<std::string> bad = {
      "",
      "v2 ecgraph\n",
      "v1 spaceship\n",
      "v1 ecgraph\nvertices 2\ncolors 1\nedges 1\n0 1 0\n",
      "v1 ecgraph\nvertices 2\ncolors 1\nedges 1\n0 x 0 1\n",
      "v1 ecgraph\nvertices 2\ncolors 1\nedges 1\n0 0 0 1\ndefault_bound 1\n"
      "bounds 0\n",
      "v1 dbmis\nmatroid free 2 0 1\nweights 1 1\nhyperedges 0\n",
      "v1 dbmis\nmatroid blob 1\n",
      "v1 ecgraph\nvertices 2\ncolors 1\nedges 0\ndefault_bound 1\nbounds 0\n"
      "extra 1\n",
      "v1 ecgraph\nvertices 2\ncolors 1\nedges 0\ndefault_bound 1\nbounds 0\n"
      "roles 1\n0 wizard 0 -1\n",
      "v1 ecgraph\nvertices 2\ncolors 1\nedges 99999999999999999999\n",
  };
  for (const std::string& text : bad) {
    CAPTURE(text);
    CHECK_THROWS_AS(ParseInstance(text), InvalidArgument);
  }
  try {
    ParseInstance("v1 ecgraph\nvertices 2\ncolors 1\nedges 1\n0 x 0 1\n");
  } catch (const InvalidArgument& e) {
    CHECK(std::string(e.what()).find("line 5") != std::string::npos);
  }
}

TEST_CASE("solutions round-trip") {
  Solution s;
  s.kind = "parity";
  s.solver = "local";
  s.items = {0, 3};
  s.weight = 9;
  s.lifted = {2, 5};
  s.has_lifted = true;
  const std::string text = RenderSolution(s);
  CHECK(text ==
        "v1 solution\nkind parity\nsolver local\nsize 2\nweight 9\n"
        "items 2 0 3\nlifted 2 2 5\n");
  Solution back = ParseSolution(text);
  CHECK(back.items == s.items);
  CHECK(back.lifted == s.lifted);
  CHECK(back.weight == 9);
  CHECK(RenderSolution(back) == text);
  CHECK_THROWS_AS(ParseSolution("v1 solution\nkind x\nsolver y\nsize 3\n"
                                "weight 0\nitems 1 0\n"),
                  InvalidArgument);
}

}  // namespace
}  // namespace dbmis
