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
#include <map>
#include <string>

#include "dbmis/enumerate.h"

namespace dbmis {

void BMatchingInstance::Validate() const {
  if (static_cast<int>(degree_bounds.size()) != graph.vertex_count()) {
    throw InvalidArgument("b-matching needs one degree bound per vertex");
  }
  for (int b : degree_bounds) {
    if (b < 0) throw InvalidArgument("negative degree bound");
  }
}

bool IsGProperlyColoredBMatching(const BMatchingInstance& instance,
                                 std::span<const int> edge_ids) {
  instance.Validate();
  const EdgeColoredMultigraph& g = instance.graph;
  if (!IsGProperlyColored(g, edge_ids)) return false;
  std::vector<int> degree(g.vertex_count(), 0);
  for (int id : edge_ids) {
    for (int x : {g.edge(id).u, g.edge(id).v}) {
      if (++degree[x] > instance.degree_bounds[x]) return false;
    }
  }
  return true;
}

HierarchicalBMatchingInstance::HierarchicalBMatchingInstance(
    int vertices, std::vector<std::pair<int, int>> edges,
    std::vector<Weight> weights, std::vector<LaminarSet> family)
    : vertices_(vertices),
      edges_(std::move(edges)),
      weights_(std::move(weights)),
      family_(std::move(family)) {
  if (weights_.empty()) weights_.assign(edges_.size(), 1);
  if (weights_.size() != edges_.size()) {
    throw InvalidArgument("hierarchical instance needs one weight per edge");
  }
  for (const auto& [a, b] : edges_) {
    if (a < 0 || b < 0 || a >= vertices_ || b >= vertices_ || a == b) {
      throw InvalidArgument("bad split-graph edge");
    }
  }
  for (auto& set : family_) {
    set.members = ToElementSet(set.members);
    if (set.bound < 0) throw InvalidArgument("negative laminar bound");
    for (int x : set.members) {
      if (x < 0 || x >= vertices_) {
        throw InvalidArgument("laminar member out of range");
      }
    }
  }
}

bool HierarchicalBMatchingInstance::IsLaminar() const {
  for (std::size_t i = 0; i < family_.size(); ++i) {
    for (std::size_t j = i + 1; j < family_.size(); ++j) {
      const ElementSet& a = family_[i].members;
      const ElementSet& b = family_[j].members;
      ElementSet common;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                            std::back_inserter(common));
      if (!common.empty() && common.size() != a.size() &&
          common.size() != b.size()) {
        return false;
      }
    }
  }
  return true;
}

bool HierarchicalBMatchingInstance::IsFeasible(
    std::span<const int> edge_ids) const {
  std::vector<int> degree(vertices_, 0);
  std::vector<char> seen(edges_.size(), 0);
  for (int id : edge_ids) {
    if (id < 0 || id >= edge_count() || seen[id]) {
      throw InvalidArgument("bad or repeated edge id " + std::to_string(id));
    }
    seen[id] = 1;
    ++degree[edges_[id].first];
    ++degree[edges_[id].second];
  }
  for (const LaminarSet& set : family_) {
    long long total = 0;
    for (int x : set.members) total += degree[x];
    if (total > set.bound) return false;
  }
  return true;
}

Weight HierarchicalBMatchingInstance::TotalWeight(
    std::span<const int> edge_ids) const {
  Weight total = 0;
  for (int id : edge_ids) total += weights_.at(id);
  return total;
}

HierarchicalReduction ReduceBMatchingToHierarchical(
    const BMatchingInstance& instance) {
  instance.Validate();
  const EdgeColoredMultigraph& g = instance.graph;
  HierarchicalReduction out;
  std::vector<std::pair<int, int>> edges;
  std::vector<Weight> weights;
  std::vector<ElementSet> top(g.vertex_count());
  std::map<std::pair<int, int>, ElementSet> by_color;
  for (int j = 0; j < g.edge_count(); ++j) {
    const ColoredEdge& e = g.edge(j);
    const int a = 2 * j;
    const int b = 2 * j + 1;
    out.copies.push_back({e.u, j});
    out.copies.push_back({e.v, j});
    edges.emplace_back(a, b);
    weights.push_back(e.weight);
    top[e.u].push_back(a);
    top[e.v].push_back(b);
    by_color[{e.u, e.color}].push_back(a);
    by_color[{e.v, e.color}].push_back(b);
  }
  std::vector<LaminarSet> family;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (top[v].empty()) continue;
    family.push_back({top[v], instance.degree_bounds[v], v, -1});
    for (int c = 0; c < g.color_count(); ++c) {
      auto it = by_color.find({v, c});
      if (it == by_color.end()) continue;
      family.push_back({it->second, g.bound(v, c), v, c});
    }
  }
  out.target = HierarchicalBMatchingInstance(
      2 * g.edge_count(), std::move(edges), std::move(weights),
      std::move(family));
  return out;
}

ElementSet SolveBMatchingExact(const BMatchingInstance& instance,
                               const ExactOptions& options) {
  instance.Validate();
  std::vector<Weight> weights;
  for (const ColoredEdge& e : instance.graph.edges()) {
    weights.push_back(e.weight);
  }
  return MaxWeightDownwardClosed(
      weights,
      [&](const std::vector<int>& ids) {
        return IsGProperlyColoredBMatching(instance, ids);
      },
      options, "b-matching solver");
}

ElementSet SolveHierarchicalExact(const HierarchicalBMatchingInstance& h,
                                  const ExactOptions& options) {
  return MaxWeightDownwardClosed(
      h.weights(),
      [&](const std::vector<int>& ids) { return h.IsFeasible(ids); }, options,
      "hierarchical b-matching solver");
}

}  // namespace dbmis
