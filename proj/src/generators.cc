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

#include "dbmis/generators.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>
#include <tuple>

#include "dbmis/random.h"

namespace dbmis {

namespace {

ColorBounds RandomBounds(SplitMix64& rng, int vertices, int colors,
                         BoundMode mode) {
  ColorBounds bounds(vertices, colors, 1);
  if (mode == BoundMode::kRandom) {
    for (int v = 0; v < vertices; ++v) {
      for (int c = 0; c < colors; ++c) bounds.set(v, c, rng.UniformInt(0, 2));
    }
  }
  return bounds;
}

Weight RandomWeight(SplitMix64& rng, Weight lo, Weight hi) {
  if (hi <= lo) return lo;
  return lo + static_cast<Weight>(
                  rng.UniformBelow(static_cast<std::uint64_t>(hi - lo) + 1));
}

}  // namespace

EdgeColoredMultigraph GenEcGraph(std::uint64_t seed,
                                 const EcGraphParams& params) {
  const int n = params.vertices;
  const int m = params.edges;
  const int k = params.colors;
  if (n < 2 || m < 0 || k < 1) {
    throw InvalidArgument("gen_ecgraph needs n >= 2, m >= 0, k >= 1");
  }
  const long long capacity = static_cast<long long>(k) * n * (n - 1) / 2;
  if (m > capacity) {
    throw InvalidArgument("gen_ecgraph: " + std::to_string(m) +
                          " edges exceed the " + std::to_string(capacity) +
                          " available (pair, color) slots");
  }
  if (params.max_weight < 1) throw InvalidArgument("max_weight must be >= 1");
  const std::uint64_t parallel_ppm = static_cast<std::uint64_t>(
      std::llround(std::clamp(params.parallel_prob, 0.0, 1.0) * 1e6));

  SplitMix64 rng(seed);
  std::set<std::tuple<int, int, int>> used;
  std::vector<std::pair<int, int>> pairs;  // distinct pairs, first-use order
  std::vector<ColoredEdge> edges;
  auto free_colors = [&](int a, int b) {
    std::vector<int> out;
    for (int c = 0; c < k; ++c) {
      if (!used.count({std::min(a, b), std::max(a, b), c})) out.push_back(c);
    }
    return out;
  };

  while (static_cast<int>(edges.size()) < m) {
    int u = -1;
    int v = -1;
    if (!pairs.empty() && rng.Chance(parallel_ppm, 1000000)) {
      std::vector<std::pair<int, int>> open;
      for (auto [a, b] : pairs) {
        if (!free_colors(a, b).empty()) open.emplace_back(a, b);
      }
      if (!open.empty()) {
        std::tie(u, v) = open[rng.UniformBelow(open.size())];
      }
    }
    if (u < 0) {
      u = static_cast<int>(rng.UniformBelow(n));
      v = static_cast<int>(rng.UniformBelow(n - 1));
      if (v >= u) ++v;
    }
    std::vector<int> colors = free_colors(u, v);
    if (colors.empty()) continue;
    int c = colors[rng.UniformBelow(colors.size())];
    used.insert({std::min(u, v), std::max(u, v), c});
    if (std::find(pairs.begin(), pairs.end(), std::pair{u, v}) == pairs.end()) {
      pairs.emplace_back(u, v);
    }
    edges.push_back({u, v, c, RandomWeight(rng, 1, params.max_weight)});
  }
  ColorBounds bounds = RandomBounds(rng, n, k, params.bounds);
  return EdgeColoredMultigraph(n, k, std::move(edges), std::move(bounds));
}

DbmisInstance GenDbmis(std::uint64_t seed, const DbmisParams& params) {
  const int n = params.elements;
  if (n < 0 || params.max_degree < 0 || params.hyperedges < 0) {
    throw InvalidArgument("gen_dbmis needs nonnegative sizes");
  }
  if (params.min_weight < 0 || params.max_weight < params.min_weight) {
    throw InvalidArgument("gen_dbmis needs 0 <= min_weight <= max_weight");
  }
  SplitMix64 rng(seed);
  ElementSet ground(n);
  for (int i = 0; i < n; ++i) ground[i] = i;

  MatroidChoice choice = params.matroid;
  if (choice == MatroidChoice::kAny) {
    choice = static_cast<MatroidChoice>(1 + rng.UniformBelow(4));
  }
  MatroidOracle matroid;
  switch (choice) {
    case MatroidChoice::kGraphic: {
      const int vertices = std::max(2, rng.UniformInt(2, std::max(2, n)));
      std::vector<std::pair<int, int>> edges;
      for (int i = 0; i < n; ++i) {
        int a = static_cast<int>(rng.UniformBelow(vertices));
        int b = static_cast<int>(rng.UniformBelow(vertices - 1));
        if (b >= a) ++b;
        edges.emplace_back(a, b);
      }
      matroid = MakeGraphic(vertices, edges);
      break;
    }
    case MatroidChoice::kUniform:
      matroid = MakeUniform(ground, rng.UniformInt(0, n));
      break;
    case MatroidChoice::kPartition: {
      const int part_count = std::max(1, rng.UniformInt(1, std::max(1, n)));
      std::vector<ElementSet> parts(part_count);
      for (int i = 0; i < n; ++i) {
        if (rng.Chance(1, 4)) continue;  // unconstrained element
        parts[rng.UniformBelow(part_count)].push_back(i);
      }
      std::vector<int> caps;
      for (int j = 0; j < part_count; ++j) caps.push_back(rng.UniformInt(0, 2));
      matroid = MakePartition(ground, std::move(parts), std::move(caps));
      break;
    }
    case MatroidChoice::kFree:
    case MatroidChoice::kAny:
      matroid = MakeFree(ground);
      break;
  }

  std::vector<ElementSet> slots(params.hyperedges);
  for (int i = 0; i < n && params.hyperedges > 0; ++i) {
    int d = std::min(rng.UniformInt(0, params.max_degree), params.hyperedges);
    std::vector<int> pool(params.hyperedges);
    for (int j = 0; j < params.hyperedges; ++j) pool[j] = j;
    for (int j = 0; j < d; ++j) {
      int pick = j + static_cast<int>(rng.UniformBelow(pool.size() - j));
      std::swap(pool[j], pool[pick]);
      slots[pool[j]].push_back(i);
    }
  }
  std::vector<Hyperedge> hyperedges;
  for (auto& members : slots) {
    if (members.empty()) continue;
    int bound = params.unit_bounds ? (rng.Chance(1, 8) ? 0 : 1)
                                   : rng.UniformInt(0, 2);
    hyperedges.push_back({std::move(members), bound});
  }
  std::vector<Weight> weights;
  for (int i = 0; i < n; ++i) {
    weights.push_back(RandomWeight(rng, params.min_weight, params.max_weight));
  }
  return DbmisInstance(std::move(matroid), std::move(hyperedges),
                       std::move(weights));
}

ColoredDigraph GenDigraph(std::uint64_t seed, const DigraphParams& params) {
  const int n = params.vertices;
  if (n < 2 || params.arcs < 0 || params.colors < 1) {
    throw InvalidArgument("gen_digraph needs n >= 2, m >= 0, k >= 1");
  }
  if (params.max_weight < 1) throw InvalidArgument("max_weight must be >= 1");
  SplitMix64 rng(seed);
  std::vector<Arc> arcs;
  for (int i = 0; i < params.arcs; ++i) {
    int t = static_cast<int>(rng.UniformBelow(n));
    int h = static_cast<int>(rng.UniformBelow(n - 1));
    if (h >= t) ++h;
    int c = static_cast<int>(rng.UniformBelow(params.colors));
    arcs.push_back({t, h, c, RandomWeight(rng, 1, params.max_weight)});
  }
  ColorBounds bounds = RandomBounds(rng, n, params.colors, params.bounds);
  return ColoredDigraph(n, params.colors, std::move(arcs), std::move(bounds));
}

BMatchingInstance GenBMatching(std::uint64_t seed,
                               const EcGraphParams& params) {
  EdgeColoredMultigraph g = GenEcGraph(seed, params);
  SplitMix64 rng(DeriveSeed(seed, 1));
  std::vector<int> b;
  for (int v = 0; v < g.vertex_count(); ++v) {
    b.push_back(rng.Chance(1, 4) ? kUnbounded : rng.UniformInt(1, 3));
  }
  return BMatchingInstance{std::move(g), std::move(b)};
}

}  // namespace dbmis
