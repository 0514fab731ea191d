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
#include <string>

#include "dbmis/enumerate.h"
#include "dbmis/parity.h"

namespace dbmis {

namespace {

std::vector<ElementId> ByDescendingWeight(const DbmisInstance& instance,
                                          std::vector<ElementId> ids) {
  std::stable_sort(ids.begin(), ids.end(), [&](ElementId a, ElementId b) {
    return instance.weight(a) > instance.weight(b);
  });
  return ids;
}

}  // namespace

ElementSet SolveExact(const DbmisInstance& instance,
                      const ExactOptions& options) {
  const ElementSet& ground = instance.ground();
  std::vector<ElementId> ids;
  std::vector<int> best = MaxWeightDownwardClosed(
      instance.weights(),
      [&](const std::vector<int>& positions) {
        ids.clear();
        for (int i : positions) ids.push_back(ground[i]);
        return instance.IsFeasible(ids);
      },
      options, "exact solver");
  ElementSet out;
  for (int i : best) out.push_back(ground[i]);
  return out;
}

ElementSet SolveGreedy(const DbmisInstance& instance) {
  ElementSet chosen;
  for (ElementId v : ByDescendingWeight(instance, instance.ground())) {
    chosen.insert(std::upper_bound(chosen.begin(), chosen.end(), v), v);
    if (!instance.IsFeasible(chosen)) {
      chosen.erase(std::lower_bound(chosen.begin(), chosen.end(), v));
    }
  }
  return chosen;
}

ElementSet SolvePExchange(const DbmisInstance& instance,
                          const PExchangeOptions& options,
                          LocalSearchStats* stats) {
  if (options.p < 1) throw InvalidArgument("exchange size p must be >= 1");
  if (!instance.HasUnitBounds()) {
    throw InvalidArgument(
        "p-exchange local search requires every hyperedge bound to be <= 1");
  }
  const int p = options.p;
  const int cap = options.removal_cap.value_or(p * instance.degree() + 1);
  if (cap < 0) throw InvalidArgument("removal cap must be >= 0");
  const auto& hyperedges = instance.hyperedges();

  ElementSet current = SolveGreedy(instance);
  if (stats) stats->history.push_back(instance.TotalWeight(current));

  // With bounds <= 1, adding A forces out every current element sharing a
  // hyperedge with A, so every feasible removal set contains that forced
  // part. Beyond it, only matroid repairs remain; all inclusion-minimal
  // repairs have the same size, at most |A|, and scanning repairs by size
  // and then lexicographically visits removal sets in the same order as a
  // plain smallest-first scan over all subsets of the current set.
  while (true) {
    std::vector<ElementId> outside;
    for (ElementId v : instance.ground()) {
      if (!std::binary_search(current.begin(), current.end(), v)) {
        outside.push_back(v);
      }
    }
    outside = ByDescendingWeight(instance, std::move(outside));
    const int u = static_cast<int>(outside.size());

    ElementSet next;
    bool improved = false;
    for (int a = 1; a <= std::min(p, u) && !improved; ++a) {
      improved = ForEachCombination(u, a, [&](std::span<const int> pick) {
        ElementSet add;
        Weight gain = 0;
        for (int i : pick) {
          add.push_back(outside[i]);
          gain += instance.weight(outside[i]);
        }
        std::sort(add.begin(), add.end());

        std::vector<int> load(hyperedges.size(), 0);
        std::vector<char> touched(hyperedges.size(), 0);
        for (ElementId v : add) {
          for (int h : instance.incident(v)) {
            if (++load[h] > hyperedges[h].bound) return false;
            touched[h] = 1;
          }
        }
        ElementSet forced;
        ElementSet rest;
        for (ElementId v : current) {
          bool hit = false;
          for (int h : instance.incident(v)) hit = hit || touched[h];
          (hit ? forced : rest).push_back(v);
        }
        if (static_cast<int>(forced.size()) > cap) return false;
        const Weight forced_loss = instance.TotalWeight(forced);
        if (forced_loss >= gain) return false;

        const int r = static_cast<int>(rest.size());
        const int max_repair =
            std::min({a, r, cap - static_cast<int>(forced.size())});
        for (int s = 0; s <= max_repair; ++s) {
          bool hit = ForEachCombination(r, s, [&](std::span<const int> rem) {
            Weight loss = forced_loss;
            for (int i : rem) loss += instance.weight(rest[i]);
            if (loss >= gain) return false;
            ElementSet candidate = add;
            std::size_t ri = 0;
            for (int i = 0; i < r; ++i) {
              if (ri < rem.size() && rem[ri] == i) {
                ++ri;
              } else {
                candidate.push_back(rest[i]);
              }
            }
            std::sort(candidate.begin(), candidate.end());
            if (!instance.IsFeasible(candidate)) return false;
            next = std::move(candidate);
            return true;
          });
          if (hit) return true;
        }
        return false;
      });
    }
    if (!improved) break;
    current = std::move(next);
    if (stats) {
      ++stats->moves;
      stats->history.push_back(instance.TotalWeight(current));
    }
  }
  return current;
}

ElementSet SolveViaParity(const DbmisInstance& instance, int t,
                          LocalSearchStats* stats) {
  ReductionCertificate cert = ReduceDbmisToParity(instance);
  std::vector<int> chosen = SolveParityLocal(cert.target, t, stats);
  return LiftSolution(cert, chosen);
}

}  // namespace dbmis
