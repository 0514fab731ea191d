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

#include <map>
#include <numeric>
#include <string>

#include "dbmis/enumerate.h"

namespace dbmis {

ColoredDigraph::ColoredDigraph(int vertices, int colors, std::vector<Arc> arcs)
    : ColoredDigraph(vertices, colors, std::move(arcs),
                     ColorBounds(vertices, colors, 1)) {}

ColoredDigraph::ColoredDigraph(int vertices, int colors, std::vector<Arc> arcs,
                               ColorBounds bounds)
    : vertices_(vertices),
      colors_(colors),
      arcs_(std::move(arcs)),
      bounds_(std::move(bounds)) {
  if (vertices_ < 0) throw InvalidArgument("negative vertex count");
  if (colors_ < 1 && !arcs_.empty()) {
    throw InvalidArgument("a digraph with arcs needs at least one color");
  }
  if (bounds_.vertices() != vertices_ || bounds_.colors() != colors_) {
    throw InvalidArgument("bound table dimensions do not match the digraph");
  }
  for (std::size_t i = 0; i < arcs_.size(); ++i) {
    const Arc& a = arcs_[i];
    const std::string where = "arc " + std::to_string(i);
    if (a.tail < 0 || a.head < 0 || a.tail >= vertices_ ||
        a.head >= vertices_) {
      throw InvalidArgument(where + " has an endpoint out of range");
    }
    if (a.tail == a.head) throw InvalidArgument(where + " is a loop");
    if (a.color < 0 || a.color >= colors_) {
      throw InvalidArgument(where + " has a color out of range");
    }
    if (a.weight < 0) throw InvalidArgument(where + " has negative weight");
  }
}

Weight ColoredDigraph::TotalWeight(std::span<const int> arc_ids) const {
  Weight total = 0;
  for (int id : arc_ids) total += arcs_.at(id).weight;
  return total;
}

bool IsBranching(const ColoredDigraph& d, std::span<const int> arc_ids) {
  std::vector<int> indegree(d.vertex_count(), 0);
  std::vector<int> parent(d.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<char> seen(d.arc_count(), 0);
  for (int id : arc_ids) {
    if (id < 0 || id >= d.arc_count() || seen[id]) {
      throw InvalidArgument("bad or repeated arc id " + std::to_string(id));
    }
    seen[id] = 1;
    const Arc& a = d.arc(id);
    if (++indegree[a.head] > 1) return false;
    int x = find(a.tail);
    int y = find(a.head);
    if (x == y) return false;
    parent[x] = y;
  }
  return true;
}

bool IsGProperlyColoredBranching(const ColoredDigraph& d,
                                 std::span<const int> arc_ids,
                                 BranchingMode mode) {
  if (!IsBranching(d, arc_ids)) return false;
  std::map<std::pair<int, int>, int> load;
  for (int id : arc_ids) {
    const Arc& a = d.arc(id);
    if (++load[{a.tail, a.color}] > d.bounds().at(a.tail, a.color)) {
      return false;
    }
    if (mode == BranchingMode::kColored &&
        ++load[{a.head, a.color}] > d.bounds().at(a.head, a.color)) {
      return false;
    }
  }
  return true;
}

BranchingMatroids OutColoredBranchingMatroids(const ColoredDigraph& d) {
  const int n = d.vertex_count();
  std::vector<std::pair<int, int>> endpoints;
  for (const Arc& a : d.arcs()) endpoints.emplace_back(a.tail, a.head);

  std::vector<ElementSet> in_parts(n);
  for (int id = 0; id < d.arc_count(); ++id) {
    in_parts[d.arc(id).head].push_back(id);
  }
  std::vector<ElementSet> nonempty;
  for (auto& part : in_parts) {
    if (!part.empty()) nonempty.push_back(std::move(part));
  }
  std::vector<int> ones(nonempty.size(), 1);
  ElementSet all_arcs(d.arc_count());
  std::iota(all_arcs.begin(), all_arcs.end(), 0);

  std::vector<MatroidOracle> per_vertex;
  for (int v = 0; v < n; ++v) {
    ElementSet out;
    std::vector<ElementSet> by_color(d.color_count());
    for (int id = 0; id < d.arc_count(); ++id) {
      if (d.arc(id).tail != v) continue;
      out.push_back(id);
      by_color[d.arc(id).color].push_back(id);
    }
    if (out.empty()) continue;
    std::vector<ElementSet> parts;
    std::vector<int> caps;
    for (int c = 0; c < d.color_count(); ++c) {
      if (by_color[c].empty()) continue;
      parts.push_back(std::move(by_color[c]));
      caps.push_back(d.bounds().at(v, c));
    }
    per_vertex.push_back(
        MakePartition(std::move(out), std::move(parts), std::move(caps)));
  }

  return BranchingMatroids{
      MakeGraphic(n, endpoints),
      MakePartition(all_arcs, std::move(nonempty), std::move(ones)),
      MakeDirectSum(std::move(per_vertex)),
  };
}

DbmisInstance ReduceColoredBranchingToDbmis(const ColoredDigraph& d) {
  const int n = d.vertex_count();
  std::vector<std::pair<int, int>> endpoints;
  std::vector<Weight> weights;
  for (const Arc& a : d.arcs()) {
    endpoints.emplace_back(a.tail, a.head);
    weights.push_back(a.weight);
  }
  std::vector<Hyperedge> hyperedges;
  for (int v = 0; v < n; ++v) {
    Hyperedge h{{}, 1};
    for (int id = 0; id < d.arc_count(); ++id) {
      if (d.arc(id).head == v) h.members.push_back(id);
    }
    if (!h.members.empty()) hyperedges.push_back(std::move(h));
  }
  for (int v = 0; v < n; ++v) {
    for (int c = 0; c < d.color_count(); ++c) {
      Hyperedge h{{}, d.bounds().at(v, c)};
      for (int id = 0; id < d.arc_count(); ++id) {
        const Arc& a = d.arc(id);
        if (a.color == c && (a.tail == v || a.head == v)) {
          h.members.push_back(id);
        }
      }
      if (!h.members.empty()) hyperedges.push_back(std::move(h));
    }
  }
  return DbmisInstance(MakeGraphic(n, endpoints), std::move(hyperedges),
                       std::move(weights));
}

ElementSet SolveBranchingExact(const ColoredDigraph& d, BranchingMode mode,
                               const ExactOptions& options) {
  std::vector<Weight> weights;
  for (const Arc& a : d.arcs()) weights.push_back(a.weight);
  return MaxWeightDownwardClosed(
      weights,
      [&](const std::vector<int>& ids) {
        return IsGProperlyColoredBranching(d, ids, mode);
      },
      options, "branching solver");
}

}  // namespace dbmis
