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

#include "dbmis/branching.h"

#include <vector>

#include "dbmis/generators.h"
#include "doctest.h"
#include "oracles.h"

namespace dbmis {
namespace {

using testing::FromMask;
using testing::Range;

std::vector<ColoredDigraph> Suite() {
  std::vector<ColoredDigraph> out = {
      ColoredDigraph(2, 1, {{0, 1, 0}}),
      ColoredDigraph(3, 1, {{0, 1, 0}, {1, 2, 0}, {2, 0, 0}}),
      ColoredDigraph(3, 2, {{0, 2, 0}, {1, 2, 1}}),
      ColoredDigraph(2, 2, {{0, 1, 0}, {1, 0, 1}, {0, 1, 1}}),
      ColoredDigraph(1, 1, {})};
  for (std::uint64_t seed = 0; seed < 600; ++seed) {
    SplitMix64 rng(seed);
    DigraphParams p;
    p.vertices = rng.UniformInt(2, 5);
    p.arcs = rng.UniformInt(0, 5);
    p.colors = rng.UniformInt(1, 3);
    p.bounds = seed % 2 ? BoundMode::kRandom : BoundMode::kUnit;
    out.push_back(GenDigraph(DeriveSeed(seed, 1), p));
  }
  return out;
}

TEST_CASE("digraph validation") {
  CHECK_THROWS_AS(ColoredDigraph(2, 1, {{0, 0, 0}}), InvalidArgument);
  CHECK_THROWS_AS(ColoredDigraph(2, 1, {{0, 2, 0}}), InvalidArgument);
  CHECK_THROWS_AS(ColoredDigraph(2, 1, {{0, 1, 1}}), InvalidArgument);
  CHECK_THROWS_AS(ColoredDigraph(2, 1, {{0, 1, 0, -3}}), InvalidArgument);
  ColoredDigraph d(2, 1, {{0, 1, 0}, {0, 1, 0}});  // parallel arcs are fine
  CHECK_FALSE(IsBranching(d, std::vector<int>{0, 1}));
  CHECK_THROWS_AS(IsBranching(d, std::vector<int>{0, 0}), InvalidArgument);
}

TEST_CASE("three matroids capture out-colored branchings") {
  ColoredDigraph single(2, 1, {{0, 1, 0}});
  BranchingMatroids m = OutColoredBranchingMatroids(single);
  const std::vector<int> arc = {0};
  CHECK(m.graphic.IsIndependent(arc));
  CHECK(m.in_degree.IsIndependent(arc));
  CHECK(m.out_color.IsIndependent(arc));

  ColoredDigraph merge(3, 2, {{0, 2, 0}, {1, 2, 1}});
  const std::vector<int> both = {0, 1};
  CHECK_FALSE(OutColoredBranchingMatroids(merge).in_degree.IsIndependent(both));

  for (const ColoredDigraph& d : Suite()) {
    BranchingMatroids ms = OutColoredBranchingMatroids(d);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d.arc_count());
         ++mask) {
      std::vector<int> s = FromMask(Range(d.arc_count()), mask);
      const bool three = ms.graphic.IsIndependent(s) &&
                         ms.in_degree.IsIndependent(s) &&
                         ms.out_color.IsIndependent(s);
      REQUIRE(three ==
              testing::DirectBranching(d, s, BranchingMode::kOutColored));
      REQUIRE(IsGProperlyColoredBranching(d, s, BranchingMode::kOutColored) ==
              three);
    }
  }
}

TEST_CASE("reduction of colored branchings to DBMIS") {
  ColoredDigraph single(2, 1, {{0, 1, 0}});
  DbmisInstance one = ReduceColoredBranchingToDbmis(single);
  CHECK(one.hyperedges().size() == 3);
  CHECK(one.incident(0).size() == 3);
  CHECK(one.degree() == 3);
  CHECK(ReduceColoredBranchingToDbmis(ColoredDigraph(0, 0, {}))
            .ground()
            .empty());

  for (const ColoredDigraph& d : Suite()) {
    DbmisInstance inst = ReduceColoredBranchingToDbmis(d);
    REQUIRE(inst.degree() <= 3);
    REQUIRE(inst.ground() == Range(d.arc_count()));
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d.arc_count());
         ++mask) {
      std::vector<int> s = FromMask(Range(d.arc_count()), mask);
      const bool direct =
          testing::DirectBranching(d, s, BranchingMode::kColored);
      REQUIRE(inst.IsFeasible(s) == direct);
      REQUIRE(IsGProperlyColoredBranching(d, s, BranchingMode::kColored) ==
              direct);
    }
  }
}

TEST_CASE("exact branching solver") {
  ColoredDigraph disjoint(4, 1, {{0, 1, 0}, {2, 3, 0}});
  CHECK(SolveBranchingExact(disjoint, BranchingMode::kColored) ==
        ElementSet{0, 1});
  ColoredDigraph triangle(3, 1, {{0, 1, 0}, {1, 2, 0}, {2, 0, 0}});
  CHECK(SolveBranchingExact(triangle, BranchingMode::kColored).size() == 1);
  CHECK(SolveBranchingExact(triangle, BranchingMode::kOutColored).size() == 2);
  CHECK(SolveBranchingExact(ColoredDigraph(3, 1, {}), BranchingMode::kColored)
            .empty());
  ExactOptions tiny{1};
  CHECK_THROWS_AS(SolveBranchingExact(disjoint, BranchingMode::kColored, tiny),
                  ResourceLimit);

  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    SplitMix64 rng(seed);
    DigraphParams p;
    p.vertices = rng.UniformInt(2, 5);
    p.arcs = rng.UniformInt(0, 8);
    p.colors = rng.UniformInt(1, 2);
    p.max_weight = 5;
    p.bounds = seed % 2 ? BoundMode::kRandom : BoundMode::kUnit;
    ColoredDigraph d = GenDigraph(seed, p);
    for (BranchingMode mode :
         {BranchingMode::kColored, BranchingMode::kOutColored}) {
      ElementSet s = SolveBranchingExact(d, mode);
      REQUIRE(testing::DirectBranching(d, s, mode));
      REQUIRE(d.TotalWeight(s) ==
              testing::BruteMax(
                  Range(d.arc_count()),
                  [&](const std::vector<int>& t) {
                    return testing::DirectBranching(d, t, mode);
                  },
                  [&](const std::vector<int>& t) { return d.TotalWeight(t); }));
    }
  }
}

}  // namespace
}  // namespace dbmis
