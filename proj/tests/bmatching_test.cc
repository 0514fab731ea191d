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

#include "dbmis/bmatching.h"

#include <algorithm>
#include <numeric>
#include <vector>

#include "dbmis/generators.h"
#include "doctest.h"
#include "oracles.h"

namespace dbmis {
namespace {

using testing::FromMask;
using testing::Range;

// Laminar degree bounds from the definition: every set is met by at most
// `bound` chosen split edges (counted per endpoint inside the set).
bool DirectLaminarFeasible(const HierarchicalBMatchingInstance& h,
                           const std::vector<int>& s) {
  for (const LaminarSet& set : h.family()) {
    long long load = 0;
    for (int id : s) {
      load += std::count(set.members.begin(), set.members.end(),
                         h.edges()[id].first);
      load += std::count(set.members.begin(), set.members.end(),
                         h.edges()[id].second);
    }
    if (set.bound != kUnbounded && load > set.bound) return false;
  }
  return true;
}

bool Laminar(const std::vector<LaminarSet>& family) {
  for (const LaminarSet& a : family) {
    for (const LaminarSet& b : family) {
      std::vector<int> common;
      std::set_intersection(a.members.begin(), a.members.end(),
                            b.members.begin(), b.members.end(),
                            std::back_inserter(common));
      if (!common.empty() && common.size() != a.members.size() &&
          common.size() != b.members.size()) {
        return false;
      }
    }
  }
  return true;
}

TEST_CASE("single edge and star examples") {
  BMatchingInstance single{EdgeColoredMultigraph(2, 1, {{0, 1, 0, 7}}), {1, 1}};
  HierarchicalReduction r = ReduceBMatchingToHierarchical(single);
  CHECK(r.target.vertex_count() == 2);
  CHECK(r.target.edges() == std::vector<std::pair<int, int>>{{0, 1}});
  CHECK(r.target.weights() == std::vector<Weight>{7});
  CHECK(r.copies[0].vertex == 0);
  CHECK(r.copies[1].vertex == 1);
  CHECK(r.copies[1].edge == 0);

  ColorBounds g(4, 1, 1);
  g.set(0, 0, 2);
  BMatchingInstance star{
      EdgeColoredMultigraph(4, 1, {{0, 1, 0}, {0, 2, 0}, {0, 3, 0}}, g),
      {kUnbounded, 1, 1, 1}};
  HierarchicalReduction s = ReduceBMatchingToHierarchical(star);
  CHECK(s.target.vertex_count() == 6);
  bool found = false;
  for (const LaminarSet& set : s.target.family()) {
    if (set.vertex == 0 && set.color == 0) {
      CHECK(set.members.size() == 3);
      CHECK(set.bound == 2);
      found = true;
    }
  }
  CHECK(found);
  CHECK(SolveBMatchingExact(star).size() == 2);
}

TEST_CASE("exact b-matching examples") {
  EdgeColoredMultigraph same(3, 1, {{0, 1, 0}, {1, 2, 0}});
  EdgeColoredMultigraph mixed(3, 2, {{0, 1, 0}, {1, 2, 1}});
  CHECK(SolveBMatchingExact({same, {1, 1, 1}}).size() == 1);
  CHECK(SolveBMatchingExact({mixed, {1, 2, 1}}).size() == 2);
  CHECK(SolveBMatchingExact({mixed, {1, 1, 1}}).size() == 1);
  ColorBounds loose(3, 1, kUnbounded);
  EdgeColoredMultigraph free(3, 1, {{0, 1, 0}, {1, 2, 0}, {0, 2, 0}}, loose);
  CHECK(SolveBMatchingExact({free, {kUnbounded, kUnbounded, kUnbounded}}) ==
        ElementSet{0, 1, 2});
  CHECK_THROWS_AS(BMatchingInstance({same, {1, 1}}).Validate(),
                  InvalidArgument);
  CHECK_THROWS_AS(BMatchingInstance({same, {1, -1, 1}}).Validate(),
                  InvalidArgument);
}

TEST_CASE("split-graph reduction is a weight-preserving feasibility bijection") {
  int graphs = 0;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    SplitMix64 rng(seed);
    EcGraphParams p;
    p.vertices = rng.UniformInt(2, 5);
    p.colors = rng.UniformInt(1, 3);
    p.edges = rng.UniformInt(0, std::min(6, p.colors * p.vertices *
                                                (p.vertices - 1) / 2));
    p.parallel_prob = 0.3;
    p.bounds = seed % 2 ? BoundMode::kRandom : BoundMode::kUnit;
    p.max_weight = 4;
    BMatchingInstance b = GenBMatching(DeriveSeed(seed, 1), p);
    HierarchicalReduction r = ReduceBMatchingToHierarchical(b);
    const HierarchicalBMatchingInstance& h = r.target;
    ++graphs;

    int degree_sum = 0;
    for (int v = 0; v < b.graph.vertex_count(); ++v) {
      for (const ColoredEdge& e : b.graph.edges()) {
        degree_sum += (e.u == v) + (e.v == v);
      }
    }
    REQUIRE(h.vertex_count() == degree_sum);
    REQUIRE(h.edge_count() == b.graph.edge_count());
    REQUIRE(Laminar(h.family()));
    REQUIRE(h.IsLaminar());
    // Color sets of one vertex are pairwise disjoint.
    for (const LaminarSet& x : h.family()) {
      for (const LaminarSet& y : h.family()) {
        if (&x == &y || x.vertex != y.vertex || x.color < 0 || y.color < 0) {
          continue;
        }
        std::vector<int> common;
        std::set_intersection(x.members.begin(), x.members.end(),
                              y.members.begin(), y.members.end(),
                              std::back_inserter(common));
        REQUIRE(common.empty());
      }
    }
    for (std::uint64_t mask = 0;
         mask < (std::uint64_t{1} << b.graph.edge_count()); ++mask) {
      std::vector<int> s = FromMask(Range(b.graph.edge_count()), mask);
      const bool direct = testing::DirectBMatching(b, s);
      REQUIRE(IsGProperlyColoredBMatching(b, s) == direct);
      REQUIRE(h.IsFeasible(s) == direct);
      REQUIRE(DirectLaminarFeasible(h, s) == direct);
      REQUIRE(h.TotalWeight(s) == b.graph.TotalWeight(s));
    }
    REQUIRE(b.graph.TotalWeight(SolveBMatchingExact(b)) ==
            h.TotalWeight(SolveHierarchicalExact(h)));
  }
  CHECK(graphs >= 200);
}

TEST_CASE("hierarchical instance validation") {
  CHECK_THROWS_AS(HierarchicalBMatchingInstance(2, {{0, 1}}, {1, 2}, {}),
                  InvalidArgument);
  CHECK_THROWS_AS(HierarchicalBMatchingInstance(2, {{0, 2}}, {1}, {}),
                  InvalidArgument);
  CHECK_THROWS_AS(
      HierarchicalBMatchingInstance(2, {{0, 1}}, {1}, {{{0, 5}, 1, 0, -1}}),
      InvalidArgument);
  HierarchicalBMatchingInstance overlapping(
      3, {{0, 1}}, {1}, {{{0, 1}, 1, 0, -1}, {{1, 2}, 1, 1, -1}});
  CHECK_FALSE(overlapping.IsLaminar());
}

}  // namespace
}  // namespace dbmis
