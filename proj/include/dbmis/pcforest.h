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

#ifndef DBMIS_PCFOREST_H_
#define DBMIS_PCFOREST_H_

#include <map>
#include <span>
#include <tuple>
#include <utility>
#include <vector>

#include "dbmis/common.h"
#include "dbmis/instance.h"

namespace dbmis {

// Per-(vertex, color) degree bounds g_i(v) with a default for unlisted
// pairs. kUnbounded is allowed.
class ColorBounds {
 public:
  ColorBounds() = default;
  ColorBounds(int vertices, int colors, int default_bound = 1);

  int at(int vertex, int color) const;
  void set(int vertex, int color, int bound);
  bool AllEqual(int value) const;

  int vertices() const { return vertices_; }
  int colors() const { return colors_; }
  int default_bound() const { return default_bound_; }
  // (vertex, color, bound) for every pair whose bound differs from the
  // default, in (vertex, color) order.
  std::vector<std::tuple<int, int, int>> Overrides() const;

 private:
  int vertices_ = 0;
  int colors_ = 0;
  int default_bound_ = 1;
  std::vector<int> bounds_;
};

struct ColoredEdge {
  int u = 0;
  int v = 0;
  int color = 0;
  Weight weight = 1;
};

// Undirected loopless multigraph with an edge coloring into [0, k). Edge i
// has id i. Within one color class no two edges are parallel; such input
// is rejected rather than merged.
class EdgeColoredMultigraph {
 public:
  EdgeColoredMultigraph() = default;
  EdgeColoredMultigraph(int vertices, int colors,
                        std::vector<ColoredEdge> edges);
  EdgeColoredMultigraph(int vertices, int colors,
                        std::vector<ColoredEdge> edges, ColorBounds bounds);

  int vertex_count() const { return vertices_; }
  int color_count() const { return colors_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<ColoredEdge>& edges() const { return edges_; }
  const ColoredEdge& edge(int id) const { return edges_.at(id); }
  const ColorBounds& bounds() const { return bounds_; }
  int bound(int vertex, int color) const { return bounds_.at(vertex, color); }

  // Edge ids between u and v (any order), ascending.
  ElementSet EdgesBetween(int u, int v) const;
  // Edge ids of one color class, ascending.
  ElementSet EdgesOfColor(int color) const;
  ElementSet AllEdges() const;

  Weight TotalWeight(std::span<const int> edge_ids) const;

 private:
  int vertices_ = 0;
  int colors_ = 0;
  std::vector<ColoredEdge> edges_;
  ColorBounds bounds_;
};

// At most g_i(v) chosen edges of color i at every vertex v.
bool IsGProperlyColored(const EdgeColoredMultigraph& g,
                        std::span<const int> edge_ids);

// The support graph (one edge per nonempty bundle of parallel edges) is
// acyclic; equivalently the set has no cycle of length at least three.
bool IsForestWithBundles(const EdgeColoredMultigraph& g,
                         std::span<const int> edge_ids);

// Plain forest (parallel edges form a cycle) that is g-properly colored.
bool IsGProperlyColoredForest(const EdgeColoredMultigraph& g,
                              std::span<const int> edge_ids);

// A forest with bundles together with its support graph.
class BundledForest {
 public:
  BundledForest() = default;
  // Throws InvalidArgument if the support graph has a cycle.
  BundledForest(const EdgeColoredMultigraph& g, ElementSet edges);

  const ElementSet& edges() const { return edges_; }
  int size() const { return static_cast<int>(edges_.size()); }
  // Keyed by (min endpoint, max endpoint).
  const std::map<std::pair<int, int>, ElementSet>& bundles() const {
    return bundles_;
  }
  // Neighbors in the support graph, ascending.
  const std::vector<std::vector<int>>& support() const { return support_; }

  // Vertex sequence u = z_0, ..., z_q = v of the unique support path, or
  // empty if u and v lie in different components (or u == v).
  std::vector<int> SupportPath(int u, int v) const;
  // F restricted to the pair {u, v}; empty if there is no such bundle.
  ElementSet Bundle(int u, int v) const;

 private:
  ElementSet edges_;
  std::map<std::pair<int, int>, ElementSet> bundles_;
  std::vector<std::vector<int>> support_;
};

// Graphic matroid on the edges plus one hyperedge delta_{E_i}(v) with bound
// g_i(v) for every (v, i) with at least one such edge, in (v, i) order.
// Element ids are edge ids; Delta <= 2.
DbmisInstance ReduceGpfToDbmis(const EdgeColoredMultigraph& g);

// Unused u-v edges whose colors avoid every color at u or v in F \ S.
// `bundle` must be F's bundle on some edge of the u-v support path,
// otherwise ContractViolation is thrown.
ElementSet CandidateSet(const EdgeColoredMultigraph& g, const BundledForest& f,
                        int u, int v, std::span<const int> bundle);

// Local search for a maximum properly colored forest with bundles. Starts
// from the empty set and alternates greedy insertion (edges in id order)
// with bundle exchanges: for a pair u < v with unused edges whose support
// path has a bundle S (scanned from u toward v) and whose candidate set is
// larger than S, replace S by the candidate set and restart. Pairs are
// scanned in ascending order. The result has at least OPT/3 edges.
//
// Requires g_i(v) == 1 everywhere; throws InvalidArgument otherwise.
// stats->history records |F| after the greedy pass of every round.
BundledForest LocalSearchForestWithBundles(const EdgeColoredMultigraph& g,
                                           LocalSearchStats* stats = nullptr);

// Maximum-size forest with bundles inside `subset`: a maximum-weight
// spanning forest of the support graph (a support edge weighs its bundle
// size; Kruskal with ties by vertex pair), expanded back to all edges of
// the chosen bundles.
BundledForest MaxForestWithBundles(const EdgeColoredMultigraph& g,
                                   std::span<const int> subset);

// Maximum-cardinality matching of one color class (Edmonds' blossom
// algorithm). Returns edge ids.
ElementSet MaximumMatchingOfColor(const EdgeColoredMultigraph& g, int color);

// Union of per-color maximum matchings, reduced by MaxForestWithBundles.
// Guarantees 3/4 of the optimum for two colors and 1/2 for three.
BundledForest SmallColors(const EdgeColoredMultigraph& g);

// Exact maximum-size g-properly colored forest with bundles (enumeration).
ElementSet SolveBundledExact(const EdgeColoredMultigraph& g,
                             const ExactOptions& options = {});

// Exact maximum-weight g-properly colored forest (enumeration directly on
// the graph, independent of ReduceGpfToDbmis).
ElementSet SolveGpfExact(const EdgeColoredMultigraph& g,
                         const ExactOptions& options = {});

}  // namespace dbmis

#endif  // DBMIS_PCFOREST_H_
