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

#include "dbmis/pcforest.h"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <string>

#include "dbmis/enumerate.h"
#include "dbmis/matroid.h"

namespace dbmis {

namespace {

std::pair<int, int> PairKey(int u, int v) {
  return u < v ? std::pair{u, v} : std::pair{v, u};
}

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int Find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool Union(int a, int b) {
    a = Find(a);
    b = Find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<int> parent_;
};

void CheckEdgeIds(const EdgeColoredMultigraph& g, std::span<const int> ids) {
  std::vector<char> seen(g.edge_count(), 0);
  for (int id : ids) {
    if (id < 0 || id >= g.edge_count()) {
      throw InvalidArgument("edge id " + std::to_string(id) + " out of range");
    }
    if (seen[id]) {
      throw InvalidArgument("edge id " + std::to_string(id) + " repeated");
    }
    seen[id] = 1;
  }
}

}  // namespace

ColorBounds::ColorBounds(int vertices, int colors, int default_bound)
    : vertices_(vertices),
      colors_(colors),
      default_bound_(default_bound),
      bounds_(static_cast<std::size_t>(vertices) * colors, default_bound) {
  if (vertices < 0 || colors < 0) {
    throw InvalidArgument("negative bound table dimensions");
  }
  if (default_bound < 0) throw InvalidArgument("negative degree bound");
}

int ColorBounds::at(int vertex, int color) const {
  if (vertex < 0 || vertex >= vertices_ || color < 0 || color >= colors_) {
    throw InvalidArgument("bound index (" + std::to_string(vertex) + ", " +
                          std::to_string(color) + ") out of range");
  }
  return bounds_[static_cast<std::size_t>(vertex) * colors_ + color];
}

void ColorBounds::set(int vertex, int color, int bound) {
  at(vertex, color);
  if (bound < 0) throw InvalidArgument("negative degree bound");
  bounds_[static_cast<std::size_t>(vertex) * colors_ + color] = bound;
}

bool ColorBounds::AllEqual(int value) const {
  return std::all_of(bounds_.begin(), bounds_.end(),
                     [&](int b) { return b == value; });
}

std::vector<std::tuple<int, int, int>> ColorBounds::Overrides() const {
  std::vector<std::tuple<int, int, int>> out;
  for (int v = 0; v < vertices_; ++v) {
    for (int c = 0; c < colors_; ++c) {
      int b = at(v, c);
      if (b != default_bound_) out.emplace_back(v, c, b);
    }
  }
  return out;
}

EdgeColoredMultigraph::EdgeColoredMultigraph(int vertices, int colors,
                                             std::vector<ColoredEdge> edges)
    : EdgeColoredMultigraph(vertices, colors, std::move(edges),
                            ColorBounds(vertices, colors, 1)) {}

EdgeColoredMultigraph::EdgeColoredMultigraph(int vertices, int colors,
                                             std::vector<ColoredEdge> edges,
                                             ColorBounds bounds)
    : vertices_(vertices),
      colors_(colors),
      edges_(std::move(edges)),
      bounds_(std::move(bounds)) {
  if (vertices_ < 0) throw InvalidArgument("negative vertex count");
  if (colors_ < 1 && !edges_.empty()) {
    throw InvalidArgument("a graph with edges needs at least one color");
  }
  if (bounds_.vertices() != vertices_ || bounds_.colors() != colors_) {
    throw InvalidArgument("bound table dimensions do not match the graph");
  }
  std::set<std::tuple<int, int, int>> classes;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const ColoredEdge& e = edges_[i];
    const std::string where = "edge " + std::to_string(i);
    if (e.u < 0 || e.v < 0 || e.u >= vertices_ || e.v >= vertices_) {
      throw InvalidArgument(where + " has an endpoint out of range");
    }
    if (e.u == e.v) throw InvalidArgument(where + " is a loop");
    if (e.color < 0 || e.color >= colors_) {
      throw InvalidArgument(where + " has a color out of range");
    }
    if (e.weight < 0) throw InvalidArgument(where + " has negative weight");
    auto [a, b] = PairKey(e.u, e.v);
    if (!classes.emplace(a, b, e.color).second) {
      throw InvalidArgument(where + " is parallel to another edge of color " +
                            std::to_string(e.color));
    }
  }
}

ElementSet EdgeColoredMultigraph::EdgesBetween(int u, int v) const {
  ElementSet out;
  auto key = PairKey(u, v);
  for (int i = 0; i < edge_count(); ++i) {
    if (PairKey(edges_[i].u, edges_[i].v) == key) out.push_back(i);
  }
  return out;
}

ElementSet EdgeColoredMultigraph::EdgesOfColor(int color) const {
  ElementSet out;
  for (int i = 0; i < edge_count(); ++i) {
    if (edges_[i].color == color) out.push_back(i);
  }
  return out;
}

ElementSet EdgeColoredMultigraph::AllEdges() const {
  ElementSet out(edges_.size());
  std::iota(out.begin(), out.end(), 0);
  return out;
}

Weight EdgeColoredMultigraph::TotalWeight(std::span<const int> ids) const {
  Weight total = 0;
  for (int id : ids) total += edges_.at(id).weight;
  return total;
}

bool IsGProperlyColored(const EdgeColoredMultigraph& g,
                        std::span<const int> edge_ids) {
  CheckEdgeIds(g, edge_ids);
  std::map<std::pair<int, int>, int> load;
  for (int id : edge_ids) {
    const ColoredEdge& e = g.edge(id);
    for (int x : {e.u, e.v}) {
      if (++load[{x, e.color}] > g.bound(x, e.color)) return false;
    }
  }
  return true;
}

bool IsForestWithBundles(const EdgeColoredMultigraph& g,
                         std::span<const int> edge_ids) {
  CheckEdgeIds(g, edge_ids);
  std::set<std::pair<int, int>> support;
  for (int id : edge_ids) support.insert(PairKey(g.edge(id).u, g.edge(id).v));
  UnionFind uf(g.vertex_count());
  for (auto [a, b] : support) {
    if (!uf.Union(a, b)) return false;
  }
  return true;
}

bool IsGProperlyColoredForest(const EdgeColoredMultigraph& g,
                              std::span<const int> edge_ids) {
  if (!IsGProperlyColored(g, edge_ids)) return false;
  UnionFind uf(g.vertex_count());
  for (int id : edge_ids) {
    if (!uf.Union(g.edge(id).u, g.edge(id).v)) return false;
  }
  return true;
}

BundledForest::BundledForest(const EdgeColoredMultigraph& g, ElementSet edges)
    : edges_(ToElementSet(edges)), support_(g.vertex_count()) {
  if (!IsForestWithBundles(g, edges_)) {
    throw InvalidArgument("edge set " + FormatSet(edges_) +
                          " is not a forest with bundles");
  }
  for (int id : edges_) {
    bundles_[PairKey(g.edge(id).u, g.edge(id).v)].push_back(id);
  }
  for (const auto& [key, bundle] : bundles_) {
    support_[key.first].push_back(key.second);
    support_[key.second].push_back(key.first);
  }
  for (auto& nbrs : support_) std::sort(nbrs.begin(), nbrs.end());
}

std::vector<int> BundledForest::SupportPath(int u, int v) const {
  const int n = static_cast<int>(support_.size());
  if (u < 0 || v < 0 || u >= n || v >= n) {
    throw InvalidArgument("vertex out of range");
  }
  if (u == v) return {};
  std::vector<int> parent(n, -1);
  parent[u] = u;
  std::queue<int> queue;
  queue.push(u);
  while (!queue.empty() && parent[v] < 0) {
    int x = queue.front();
    queue.pop();
    for (int y : support_[x]) {
      if (parent[y] < 0) {
        parent[y] = x;
        queue.push(y);
      }
    }
  }
  if (parent[v] < 0) return {};
  std::vector<int> path;
  for (int x = v; x != u; x = parent[x]) path.push_back(x);
  path.push_back(u);
  std::reverse(path.begin(), path.end());
  return path;
}

ElementSet BundledForest::Bundle(int u, int v) const {
  auto it = bundles_.find(PairKey(u, v));
  return it == bundles_.end() ? ElementSet{} : it->second;
}

DbmisInstance ReduceGpfToDbmis(const EdgeColoredMultigraph& g) {
  std::vector<std::pair<int, int>> endpoints;
  std::vector<Weight> weights;
  for (const ColoredEdge& e : g.edges()) {
    endpoints.emplace_back(e.u, e.v);
    weights.push_back(e.weight);
  }
  std::vector<Hyperedge> hyperedges;
  for (int v = 0; v < g.vertex_count(); ++v) {
    for (int c = 0; c < g.color_count(); ++c) {
      Hyperedge h;
      for (int i = 0; i < g.edge_count(); ++i) {
        const ColoredEdge& e = g.edge(i);
        if (e.color == c && (e.u == v || e.v == v)) h.members.push_back(i);
      }
      if (h.members.empty()) continue;
      h.bound = g.bound(v, c);
      hyperedges.push_back(std::move(h));
    }
  }
  return DbmisInstance(MakeGraphic(g.vertex_count(), endpoints),
                       std::move(hyperedges), std::move(weights));
}

ElementSet CandidateSet(const EdgeColoredMultigraph& g, const BundledForest& f,
                        int u, int v, std::span<const int> bundle) {
  ElementSet s = ToElementSet(bundle);
  std::vector<int> path = f.SupportPath(u, v);
  bool on_path = false;
  for (std::size_t i = 1; i < path.size() && !on_path; ++i) {
    on_path = !s.empty() && f.Bundle(path[i - 1], path[i]) == s;
  }
  if (!on_path) {
    throw ContractViolation("bundle " + FormatSet(s) +
                            " is not on the support path between " +
                            std::to_string(u) + " and " + std::to_string(v));
  }
  std::set<int> blocked;
  for (int id : f.edges()) {
    if (std::binary_search(s.begin(), s.end(), id)) continue;
    const ColoredEdge& e = g.edge(id);
    if (e.u == u || e.v == u || e.u == v || e.v == v) blocked.insert(e.color);
  }
  ElementSet out;
  for (int id : g.EdgesBetween(u, v)) {
    if (std::binary_search(f.edges().begin(), f.edges().end(), id)) continue;
    if (!blocked.count(g.edge(id).color)) out.push_back(id);
  }
  return out;
}

BundledForest LocalSearchForestWithBundles(const EdgeColoredMultigraph& g,
                                           LocalSearchStats* stats) {
  if (!g.bounds().AllEqual(1)) {
    throw InvalidArgument(
        "bundled-forest local search needs g_i(v) = 1 for all v, i");
  }
  std::set<std::pair<int, int>> pairs;
  for (const ColoredEdge& e : g.edges()) pairs.insert(PairKey(e.u, e.v));

  ElementSet f;
  while (true) {
    for (int id = 0; id < g.edge_count(); ++id) {
      if (std::binary_search(f.begin(), f.end(), id)) continue;
      ElementSet grown = f;
      grown.insert(std::upper_bound(grown.begin(), grown.end(), id), id);
      if (IsGProperlyColored(g, grown) && IsForestWithBundles(g, grown)) {
        f = std::move(grown);
      }
    }
    if (stats) stats->history.push_back(static_cast<Weight>(f.size()));

    BundledForest forest(g, f);
    bool exchanged = false;
    for (auto [u, v] : pairs) {
      ElementSet unused;
      for (int id : g.EdgesBetween(u, v)) {
        if (!std::binary_search(f.begin(), f.end(), id)) unused.push_back(id);
      }
      if (unused.empty()) continue;
      std::vector<int> path = forest.SupportPath(u, v);
      for (std::size_t i = 1; i < path.size(); ++i) {
        ElementSet s = forest.Bundle(path[i - 1], path[i]);
        ElementSet candidates = CandidateSet(g, forest, u, v, s);
        if (candidates.size() <= s.size()) continue;
        ElementSet next;
        std::set_difference(f.begin(), f.end(), s.begin(), s.end(),
                            std::back_inserter(next));
        next.insert(next.end(), candidates.begin(), candidates.end());
        std::sort(next.begin(), next.end());
        if (!IsGProperlyColored(g, next) || !IsForestWithBundles(g, next)) {
          throw std::logic_error("bundle exchange produced an infeasible set");
        }
        f = std::move(next);
        exchanged = true;
        break;
      }
      if (exchanged) break;
    }
    if (!exchanged) break;
    if (stats) ++stats->moves;
  }
  return BundledForest(g, f);
}

BundledForest MaxForestWithBundles(const EdgeColoredMultigraph& g,
                                   std::span<const int> subset) {
  ElementSet m = ToElementSet(subset);
  CheckEdgeIds(g, m);
  std::map<std::pair<int, int>, ElementSet> bundles;
  for (int id : m) bundles[PairKey(g.edge(id).u, g.edge(id).v)].push_back(id);
  std::vector<std::pair<std::pair<int, int>, const ElementSet*>> order;
  for (const auto& [key, bundle] : bundles) order.emplace_back(key, &bundle);
  std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
    return a.second->size() > b.second->size();
  });
  UnionFind uf(g.vertex_count());
  ElementSet chosen;
  for (const auto& [key, bundle] : order) {
    if (uf.Union(key.first, key.second)) {
      chosen.insert(chosen.end(), bundle->begin(), bundle->end());
    }
  }
  std::sort(chosen.begin(), chosen.end());
  return BundledForest(g, std::move(chosen));
}

namespace {

// Edmonds' blossom algorithm for maximum-cardinality matching in a simple
// graph, following the classic O(n^3) BFS formulation with blossom
// contraction via base labels.
class BlossomMatcher {
 public:
  BlossomMatcher(int n, std::vector<std::vector<int>> adj)
      : n_(n), adj_(std::move(adj)), match_(n, -1) {}

  std::vector<int> Solve() {
    for (int root = 0; root < n_; ++root) {
      if (match_[root] >= 0) continue;
      int end = FindPath(root);
      while (end >= 0) {
        int prev = parent_[end];
        int next = match_[prev];
        match_[end] = prev;
        match_[prev] = end;
        end = next;
      }
    }
    return match_;
  }

 private:
  int Lca(int a, int b) {
    std::vector<char> seen(n_, 0);
    while (true) {
      a = base_[a];
      seen[a] = 1;
      if (match_[a] < 0) break;
      a = parent_[match_[a]];
    }
    while (true) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void MarkPath(int v, int b, int child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = in_blossom_[base_[match_[v]]] = 1;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  int FindPath(int root) {
    used_.assign(n_, 0);
    parent_.assign(n_, -1);
    base_.resize(n_);
    std::iota(base_.begin(), base_.end(), 0);
    used_[root] = 1;
    std::queue<int> queue;
    queue.push(root);
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop();
      for (int to : adj_[v]) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] >= 0 && parent_[match_[to]] >= 0)) {
          int cur = Lca(v, to);
          in_blossom_.assign(n_, 0);
          MarkPath(v, cur, to);
          MarkPath(to, cur, v);
          for (int i = 0; i < n_; ++i) {
            if (in_blossom_[base_[i]]) {
              base_[i] = cur;
              if (!used_[i]) {
                used_[i] = 1;
                queue.push(i);
              }
            }
          }
        } else if (parent_[to] < 0) {
          parent_[to] = v;
          if (match_[to] < 0) return to;
          used_[match_[to]] = 1;
          queue.push(match_[to]);
        }
      }
    }
    return -1;
  }

  int n_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> match_;
  std::vector<int> parent_;
  std::vector<int> base_;
  std::vector<char> used_;
  std::vector<char> in_blossom_;
};

}  // namespace

ElementSet MaximumMatchingOfColor(const EdgeColoredMultigraph& g, int color) {
  if (color < 0 || color >= g.color_count()) {
    throw InvalidArgument("color out of range");
  }
  const int n = g.vertex_count();
  std::vector<std::vector<int>> adj(n);
  std::map<std::pair<int, int>, int> edge_of;
  for (int id : g.EdgesOfColor(color)) {
    const ColoredEdge& e = g.edge(id);
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
    edge_of[PairKey(e.u, e.v)] = id;
  }
  for (auto& nbrs : adj) std::sort(nbrs.begin(), nbrs.end());
  std::vector<int> mate = BlossomMatcher(n, std::move(adj)).Solve();
  ElementSet out;
  for (int v = 0; v < n; ++v) {
    if (mate[v] > v) out.push_back(edge_of.at({v, mate[v]}));
  }
  std::sort(out.begin(), out.end());
  return out;
}

BundledForest SmallColors(const EdgeColoredMultigraph& g) {
  ElementSet all;
  for (int c = 0; c < g.color_count(); ++c) {
    ElementSet m = MaximumMatchingOfColor(g, c);
    all.insert(all.end(), m.begin(), m.end());
  }
  return MaxForestWithBundles(g, all);
}

ElementSet SolveBundledExact(const EdgeColoredMultigraph& g,
                             const ExactOptions& options) {
  std::vector<Weight> unit(g.edge_count(), 1);
  return MaxWeightDownwardClosed(
      unit,
      [&](const std::vector<int>& ids) {
        return IsGProperlyColored(g, ids) && IsForestWithBundles(g, ids);
      },
      options, "bundled forest solver");
}

ElementSet SolveGpfExact(const EdgeColoredMultigraph& g,
                         const ExactOptions& options) {
  std::vector<Weight> weights;
  for (const ColoredEdge& e : g.edges()) weights.push_back(e.weight);
  return MaxWeightDownwardClosed(
      weights,
      [&](const std::vector<int>& ids) {
        return IsGProperlyColoredForest(g, ids);
      },
      options, "properly colored forest solver");
}

}  // namespace dbmis
