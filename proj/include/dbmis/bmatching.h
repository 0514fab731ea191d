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

#ifndef DBMIS_BMATCHING_H_
#define DBMIS_BMATCHING_H_

#include <span>
#include <utility>
#include <vector>

#include "dbmis/common.h"
#include "dbmis/pcforest.h"

namespace dbmis {

// A g-properly colored b-matching instance: at most b(v) chosen edges at v
// and at most g_i(v) chosen edges of color i at v. kUnbounded is allowed
// for both.
struct BMatchingInstance {
  EdgeColoredMultigraph graph;
  std::vector<int> degree_bounds;  // b(v)

  void Validate() const;
};

bool IsGProperlyColoredBMatching(const BMatchingInstance& instance,
                                 std::span<const int> edge_ids);

struct LaminarSet {
  ElementSet members;  // split-graph vertex ids
  int bound = 0;
  int vertex = 0;  // original vertex owning the set
  int color = -1;  // -1 for the per-vertex top set
};

// Hierarchical b-matching: edges of a split graph with a laminar family of
// vertex sets, each bounding the total degree of its members.
class HierarchicalBMatchingInstance {
 public:
  HierarchicalBMatchingInstance() = default;
  HierarchicalBMatchingInstance(int vertices,
                                std::vector<std::pair<int, int>> edges,
                                std::vector<Weight> weights,
                                std::vector<LaminarSet> family);

  int vertex_count() const { return vertices_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<Weight>& weights() const { return weights_; }
  const std::vector<LaminarSet>& family() const { return family_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  // Any two members of the family are disjoint or nested.
  bool IsLaminar() const;
  bool IsFeasible(std::span<const int> edge_ids) const;
  Weight TotalWeight(std::span<const int> edge_ids) const;

 private:
  int vertices_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<Weight> weights_;
  std::vector<LaminarSet> family_;
};

struct SplitVertex {
  int vertex = 0;
  int edge = 0;
};

struct HierarchicalReduction {
  HierarchicalBMatchingInstance target;
  // copies[x] = (v, e) for split vertex x = v^e. Edge j = (u, v) becomes
  // split edge j = (2j, 2j+1) with 2j = u^j and 2j+1 = v^j.
  std::vector<SplitVertex> copies;
};

// One copy v^e per (vertex, incident edge). For every vertex the family
// holds a top set of all its copies with bound b(v) and, beneath it, the
// sets L_{v,i} of copies on color-i edges with bound g_i(v). Sets with no
// members are omitted.
HierarchicalReduction ReduceBMatchingToHierarchical(
    const BMatchingInstance& instance);

// Maximum-weight g-properly colored b-matching by enumeration.
ElementSet SolveBMatchingExact(const BMatchingInstance& instance,
                               const ExactOptions& options = {});

// Maximum-weight feasible edge set of a hierarchical instance by
// enumeration.
ElementSet SolveHierarchicalExact(const HierarchicalBMatchingInstance& h,
                                  const ExactOptions& options = {});

}  // namespace dbmis

#endif  // DBMIS_BMATCHING_H_
