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

#ifndef DBMIS_BRANCHING_H_
#define DBMIS_BRANCHING_H_

#include <span>
#include <vector>

#include "dbmis/common.h"
#include "dbmis/instance.h"
#include "dbmis/matroid.h"
#include "dbmis/pcforest.h"

namespace dbmis {

struct Arc {
  int tail = 0;
  int head = 0;
  int color = 0;
  Weight weight = 1;
};

// Loopless directed multigraph with arc colors in [0, k) and bounds
// g_i(v). Arc i has id i.
class ColoredDigraph {
 public:
  ColoredDigraph() = default;
  ColoredDigraph(int vertices, int colors, std::vector<Arc> arcs);
  ColoredDigraph(int vertices, int colors, std::vector<Arc> arcs,
                 ColorBounds bounds);

  int vertex_count() const { return vertices_; }
  int color_count() const { return colors_; }
  int arc_count() const { return static_cast<int>(arcs_.size()); }
  const std::vector<Arc>& arcs() const { return arcs_; }
  const Arc& arc(int id) const { return arcs_.at(id); }
  const ColorBounds& bounds() const { return bounds_; }
  Weight TotalWeight(std::span<const int> arc_ids) const;

 private:
  int vertices_ = 0;
  int colors_ = 0;
  std::vector<Arc> arcs_;
  ColorBounds bounds_;
};

// kOutColored bounds only the arcs leaving v; kColored bounds all arcs
// incident to v.
enum class BranchingMode { kOutColored, kColored };

// Every vertex has in-degree at most one and the underlying undirected
// graph is acyclic. No spanning requirement.
bool IsBranching(const ColoredDigraph& d, std::span<const int> arc_ids);

bool IsGProperlyColoredBranching(const ColoredDigraph& d,
                                 std::span<const int> arc_ids,
                                 BranchingMode mode);

struct BranchingMatroids {
  MatroidOracle graphic;    // underlying undirected graph
  MatroidOracle in_degree;  // partition over delta_in(v), capacity 1
  MatroidOracle out_color;  // direct sum over v of delta_out(v) by color
};

// Three matroids on the arc set whose common independent sets are exactly
// the g-properly out-colored branchings.
BranchingMatroids OutColoredBranchingMatroids(const ColoredDigraph& d);

// Graphic matroid of the underlying graph; hyperedges are, in order, every
// nonempty delta_in(v) with bound 1 (by v), then every nonempty set of
// color-i arcs incident to v with bound g_i(v) (by v, then i). Every arc
// lies in at most three hyperedges.
DbmisInstance ReduceColoredBranchingToDbmis(const ColoredDigraph& d);

// Maximum-weight g-properly (out-)colored branching by enumeration.
ElementSet SolveBranchingExact(const ColoredDigraph& d, BranchingMode mode,
                               const ExactOptions& options = {});

}  // namespace dbmis

#endif  // DBMIS_BRANCHING_H_
