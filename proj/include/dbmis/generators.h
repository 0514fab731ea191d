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

#ifndef DBMIS_GENERATORS_H_
#define DBMIS_GENERATORS_H_

#include <cstdint>

#include "dbmis/bmatching.h"
#include "dbmis/branching.h"
#include "dbmis/instance.h"
#include "dbmis/pcforest.h"

namespace dbmis {

// kUnit: g == 1 everywhere. kRandom: each g_i(v) uniform in [0, 2].
enum class BoundMode { kUnit, kRandom };

struct EcGraphParams {
  int vertices = 4;
  int edges = 6;
  int colors = 2;
  // Probability that a new edge reuses an existing vertex pair (with a
  // color not yet present on that pair).
  double parallel_prob = 0.0;
  BoundMode bounds = BoundMode::kUnit;
  Weight max_weight = 1;  // weights uniform in [1, max_weight]
};

// Deterministic in (seed, params). Never produces two parallel edges of
// the same color. Throws InvalidArgument if vertices < 2, edges < 0,
// colors < 1, or edges exceeds colors * C(vertices, 2).
EdgeColoredMultigraph GenEcGraph(std::uint64_t seed,
                                 const EcGraphParams& params);

enum class MatroidChoice { kAny, kGraphic, kUniform, kPartition, kFree };

struct DbmisParams {
  int elements = 6;
  int max_degree = 2;
  // Number of hyperedge slots; empty hyperedges are dropped.
  int hyperedges = 4;
  // Bounds in {0, 1} (mostly 1) instead of [0, 2].
  bool unit_bounds = false;
  Weight min_weight = 1;
  Weight max_weight = 1;
  MatroidChoice matroid = MatroidChoice::kAny;
};

DbmisInstance GenDbmis(std::uint64_t seed, const DbmisParams& params);

struct DigraphParams {
  int vertices = 4;
  int arcs = 5;
  int colors = 2;
  BoundMode bounds = BoundMode::kUnit;
  Weight max_weight = 1;
};

ColoredDigraph GenDigraph(std::uint64_t seed, const DigraphParams& params);

// Degree bounds b(v) uniform in [1, 3], or unbounded with probability 1/4.
BMatchingInstance GenBMatching(std::uint64_t seed,
                               const EcGraphParams& params);

}  // namespace dbmis

#endif  // DBMIS_GENERATORS_H_
