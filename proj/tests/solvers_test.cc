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

#include "dbmis/solvers.h"

#include <algorithm>
#include <vector>

#include "dbmis/generators.h"
#include "doctest.h"
#include "oracles.h"

namespace dbmis {
namespace {

DbmisInstance RandomInstance(std::uint64_t seed, bool unit_bounds,
                             Weight max_weight, int max_elements = 9) {
  SplitMix64 rng(seed);
  DbmisParams p;
  p.elements = rng.UniformInt(0, max_elements);
  p.max_degree = rng.UniformInt(1, 3);
  p.hyperedges = rng.UniformInt(0, 6);
  p.unit_bounds = unit_bounds;
  p.max_weight = max_weight;
  return GenDbmis(DeriveSeed(seed, 1), p);
}

TEST_CASE("exact solver matches unpruned enumeration") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    DbmisInstance inst = RandomInstance(seed, seed % 2 == 0, 1 + seed % 5);
    ElementSet s = SolveExact(inst);
    REQUIRE(testing::DirectDbmisFeasible(inst, s));
    REQUIRE(inst.TotalWeight(s) == testing::BruteDbmisOptimum(inst));
  }
}

TEST_CASE("exact solver respects its cap and breaks ties lexicographically") {
  DbmisInstance inst(MakeUniform({0, 1, 2}, 1), {});
  CHECK(SolveExact(inst) == ElementSet{0});
  ExactOptions tiny{2};
  CHECK_THROWS_AS(SolveExact(inst, tiny), ResourceLimit);
}

TEST_CASE("greedy is feasible and within Delta + 1 on unit weights") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    DbmisInstance inst = RandomInstance(seed, false, 1);
    ElementSet s = SolveGreedy(inst);
    REQUIRE(testing::DirectDbmisFeasible(inst, s));
    const long long opt = testing::BruteDbmisOptimum(inst);
    CHECK((inst.degree() + 1) * static_cast<long long>(s.size()) >= opt);
    // Maximal: no element can be added.
    for (ElementId v : inst.ground()) {
      if (std::binary_search(s.begin(), s.end(), v)) continue;
      ElementSet t = s;
      t.insert(std::lower_bound(t.begin(), t.end(), v), v);
      CHECK_FALSE(testing::DirectDbmisFeasible(inst, t));
    }
  }
}

TEST_CASE("greedy prefers heavy elements") {
  DbmisInstance inst(MakeUniform({0, 1, 2}, 1), {}, {1, 5, 5});
  CHECK(SolveGreedy(inst) == ElementSet{1});
}

TEST_CASE("p-exchange follows the plain exchange scan move for move") {
  for (std::uint64_t seed = 0; seed < 250; ++seed) {
    DbmisInstance inst = RandomInstance(seed, true, 1 + seed % 4, 7);
    for (int p = 1; p <= 3; ++p) {
      for (int cap : {-1, 0, 1, 2}) {
        PExchangeOptions opts;
        opts.p = p;
        if (cap >= 0) opts.removal_cap = cap;
        const int effective = cap >= 0 ? cap : p * inst.degree() + 1;
        ElementSet fast = SolvePExchange(inst, opts);
        std::vector<int> naive =
            testing::NaivePExchange(inst, SolveGreedy(inst), p, effective);
        CAPTURE(seed);
        CAPTURE(p);
        CAPTURE(cap);
        REQUIRE(fast == naive);
      }
    }
  }
}

TEST_CASE("p-exchange meets (Delta + 1/p) on unit bounds") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    DbmisInstance inst = RandomInstance(seed, true, 1 + seed % 5);
    const int p = 1 + static_cast<int>(seed % 3);
    LocalSearchStats stats;
    ElementSet s = SolvePExchange(inst, {p, std::nullopt}, &stats);
    REQUIRE(testing::DirectDbmisFeasible(inst, s));
    const Weight opt = testing::BruteDbmisOptimum(inst);
    const long long delta = std::max(inst.degree(), 1);
    CHECK((p * delta + 1) * inst.TotalWeight(s) >= p * opt);
    for (std::size_t i = 1; i < stats.history.size(); ++i) {
      CHECK(stats.history[i] > stats.history[i - 1]);
    }
  }
}

TEST_CASE("p-exchange preconditions") {
  DbmisInstance two(MakeFree({0, 1}), {{{0, 1}, 2}});
  CHECK_THROWS_AS(SolvePExchange(two, {1, std::nullopt}), InvalidArgument);
  DbmisInstance one(MakeFree({0, 1}), {{{0, 1}, 1}});
  CHECK_THROWS_AS(SolvePExchange(one, {0, std::nullopt}), InvalidArgument);
  CHECK_THROWS_AS(SolvePExchange(one, {1, -1}), InvalidArgument);
  CHECK(SolvePExchange(one, {1, std::nullopt}).size() == 1);
}

TEST_CASE("a 2-exchange escapes a 1-exchange local optimum") {
  // Element 0 (weight 3) blocks 1 and 2 (weight 2 each) through two
  // hyperedges; only adding both at once pays for removing 0.
  DbmisInstance inst(MakeFree({0, 1, 2}), {{{0, 1}, 1}, {{0, 2}, 1}},
                     {3, 2, 2});
  CHECK(SolvePExchange(inst, {1, std::nullopt}) == ElementSet{0});
  CHECK(SolvePExchange(inst, {2, std::nullopt}) == ElementSet{1, 2});
}

TEST_CASE("via-parity returns feasible sets of at least a third on Delta 2") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    SplitMix64 rng(seed);
    DbmisParams p;
    p.elements = rng.UniformInt(0, 7);
    p.max_degree = 2;
    p.hyperedges = 4;
    DbmisInstance inst = GenDbmis(seed, p);
    for (int t = 1; t <= 2; ++t) {
      ElementSet s = SolveViaParity(inst, t);
      REQUIRE(testing::DirectDbmisFeasible(inst, s));
      CHECK(3 * static_cast<Weight>(s.size()) >=
            testing::BruteDbmisOptimum(inst));
    }
  }
}

}  // namespace
}  // namespace dbmis
