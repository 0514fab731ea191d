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

#include "dbmis/matroid.h"

#include <cstdint>
#include <vector>

#include "doctest.h"
#include "oracles.h"

namespace dbmis {
namespace {

using testing::DirectIndependent;
using testing::FromMask;
using testing::RandomMatroid;

const MatroidKind kAllKinds[] = {
    MatroidKind::kGraphic,   MatroidKind::kUniform,     MatroidKind::kFree,
    MatroidKind::kPartition, MatroidKind::kDirectSum,   MatroidKind::kRestriction,
    MatroidKind::kCopy};

TEST_CASE("every oracle kind satisfies the independence axioms") {
  SplitMix64 rng(2024);
  for (MatroidKind kind : kAllKinds) {
    for (int n = 0; n <= 8; ++n) {
      for (int rep = 0; rep < 3; ++rep) {
        MatroidOracle m = RandomMatroid(rng, kind, n);
        CAPTURE(MatroidKindName(kind));
        CAPTURE(n);
        CHECK(testing::MatroidAxiomFailures(m) == 0);
      }
    }
  }
}

TEST_CASE("independence and rank agree with the definitions") {
  SplitMix64 rng(7);
  for (MatroidKind kind : kAllKinds) {
    for (int rep = 0; rep < 20; ++rep) {
      int n = rng.UniformInt(0, 7);
      MatroidOracle m = RandomMatroid(rng, kind, n);
      const std::vector<int>& ground = m.ground();
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<int> s = FromMask(ground, mask);
        REQUIRE(m.IsIndependent(s) == DirectIndependent(m, s));
        int rank = 0;
        for (std::uint64_t sub = mask;; sub = (sub - 1) & mask) {
          std::vector<int> t = FromMask(ground, sub);
          if (DirectIndependent(m, t)) {
            rank = std::max(rank, static_cast<int>(t.size()));
          }
          if (sub == 0) break;
        }
        REQUIRE(m.Rank(s) == rank);
      }
    }
  }
}

TEST_CASE("graphic matroid") {
  const std::vector<std::pair<int, int>> triangle = {{0, 1}, {1, 2}, {0, 2}};
  MatroidOracle m = MakeGraphic(3, triangle);
  CHECK(m.kind() == MatroidKind::kGraphic);
  CHECK(m.ground() == ElementSet{0, 1, 2});
  CHECK(m.IsIndependent(std::vector<int>{0, 1}));
  CHECK(m.IsIndependent(std::vector<int>{0, 2}));
  CHECK_FALSE(m.IsIndependent(std::vector<int>{0, 1, 2}));
  CHECK(m.Rank(std::vector<int>{0, 1, 2}) == 2);

  const std::vector<std::pair<int, int>> parallel = {{0, 1}, {1, 0}};
  MatroidOracle p = MakeGraphic(2, parallel);
  CHECK(p.IsIndependent(std::vector<int>{1}));
  CHECK_FALSE(p.IsIndependent(std::vector<int>{0, 1}));

  const std::vector<std::pair<int, int>> loop = {{1, 1}};
  CHECK_THROWS_AS(MakeGraphic(2, loop), InvalidArgument);
  const std::vector<std::pair<int, int>> outside = {{0, 5}};
  CHECK_THROWS_AS(MakeGraphic(2, outside), InvalidArgument);
}

TEST_CASE("uniform, free and partition matroids") {
  MatroidOracle u = MakeUniform({2, 4, 6}, 2);
  CHECK(u.IsIndependent(std::vector<int>{2, 6}));
  CHECK_FALSE(u.IsIndependent(std::vector<int>{2, 4, 6}));
  CHECK(u.uniform_rank() == 2);

  MatroidOracle f = MakeFree({1, 3});
  CHECK(f.IsIndependent(std::vector<int>{1, 3}));
  CHECK(f.Rank(std::vector<int>{1, 3}) == 2);

  MatroidOracle p = MakePartition({0, 1, 2, 3, 4}, {{0, 1}, {2, 3}}, {1, 0});
  CHECK(p.IsIndependent(std::vector<int>{0, 4}));
  CHECK_FALSE(p.IsIndependent(std::vector<int>{0, 1}));
  CHECK_FALSE(p.IsIndependent(std::vector<int>{2}));
  CHECK(p.Rank(std::vector<int>{0, 1, 2, 3, 4}) == 2);

  MatroidOracle q = MakePartition({{5}, {7, 8}}, {1, 1});
  CHECK(q.ground() == ElementSet{5, 7, 8});

  CHECK_THROWS_AS(MakePartition({0, 1}, {{0, 1}, {1}}, {1, 1}),
                  InvalidArgument);
  CHECK_THROWS_AS(MakePartition({0, 1}, {{0, 2}}, {1}), InvalidArgument);
  CHECK_THROWS_AS(MakeUniform({0, 1}, -1), InvalidArgument);
}

TEST_CASE("direct sums flatten and reject overlapping grounds") {
  MatroidOracle a = MakeUniform({0, 1}, 1);
  MatroidOracle b = MakeFree({2});
  MatroidOracle c = MakeUniform({3, 4}, 1);
  MatroidOracle sum = MakeDirectSum({MakeDirectSum({a, b}), c});
  CHECK(sum.kind() == MatroidKind::kDirectSum);
  CHECK(sum.children().size() == 3);
  CHECK(sum.ground() == ElementSet{0, 1, 2, 3, 4});
  CHECK(sum.IsIndependent(std::vector<int>{0, 2, 4}));
  CHECK_FALSE(sum.IsIndependent(std::vector<int>{0, 1}));
  CHECK_THROWS_AS(MakeDirectSum({a, MakeFree({1})}), InvalidArgument);
}

TEST_CASE("restriction and copy") {
  const std::vector<std::pair<int, int>> triangle = {{0, 1}, {1, 2}, {0, 2}};
  MatroidOracle g = MakeGraphic(3, triangle);
  MatroidOracle r = MakeRestriction(g, {0, 2});
  CHECK(r.ground() == ElementSet{0, 2});
  CHECK(r.IsIndependent(std::vector<int>{0, 2}));
  CHECK_THROWS_AS(r.IsIndependent(std::vector<int>{1}), InvalidArgument);
  CHECK_THROWS_AS(MakeRestriction(g, {0, 9}), InvalidArgument);

  MatroidOracle c = MakeCopy(g, {12, 11, 10});
  CHECK(c.ground() == ElementSet{10, 11, 12});
  CHECK(c.copy_sources() == std::vector<int>{2, 1, 0});
  CHECK(c.IsIndependent(std::vector<int>{10, 11}));
  CHECK_FALSE(c.IsIndependent(std::vector<int>{10, 11, 12}));
  CHECK_THROWS_AS(MakeCopy(g, {1, 2}), InvalidArgument);
  CHECK_THROWS_AS(MakeCopy(g, {1, 1, 2}), InvalidArgument);
  CHECK_THROWS_AS(MakeCopy(g, {-1, 1, 2}), InvalidArgument);
}

TEST_CASE("queries validate their arguments") {
  MatroidOracle m = MakeUniform({0, 1, 2}, 2);
  CHECK_THROWS_AS(m.IsIndependent(std::vector<int>{0, 0}), InvalidArgument);
  CHECK_THROWS_AS(m.IsIndependent(std::vector<int>{5}), InvalidArgument);
  CHECK_THROWS_AS(m.Rank(std::vector<int>{3}), InvalidArgument);
  CHECK(m.Contains(1));
  CHECK_FALSE(m.Contains(3));
  CHECK_THROWS_AS(m.graph_edges(), std::logic_error);

  MatroidOracle empty;
  CHECK(empty.kind() == MatroidKind::kFree);
  CHECK(empty.IsIndependent(std::vector<int>{}));
}

}  // namespace
}  // namespace dbmis
