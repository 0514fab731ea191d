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

#include "dbmis/parity.h"

#include <algorithm>
#include <numeric>
#include <string>

#include "dbmis/enumerate.h"

namespace dbmis {

ParityInstance::ParityInstance(MatroidOracle matroid,
                               std::vector<ElementSet> sets, int k,
                               std::vector<Weight> weights)
    : matroid_(std::move(matroid)),
      sets_(std::move(sets)),
      k_(k),
      weights_(std::move(weights)) {
  if (k_ < 1) throw InvalidArgument("parity set size must be >= 1");
  if (weights_.empty()) weights_.assign(sets_.size(), 1);
  if (weights_.size() != sets_.size()) {
    throw InvalidArgument("parity instance needs one weight per set");
  }
  ElementSet all;
  for (auto& set : sets_) {
    set = ToElementSet(set);
    if (static_cast<int>(set.size()) != k_) {
      throw InvalidArgument("parity set " + FormatSet(set) + " does not have " +
                            std::to_string(k_) + " elements");
    }
    for (ElementId id : set) {
      if (!matroid_.Contains(id)) {
        throw InvalidArgument("parity element " + std::to_string(id) +
                              " is not in the matroid ground set");
      }
      all.push_back(id);
    }
  }
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
    throw InvalidArgument("parity sets are not pairwise disjoint");
  }
  for (Weight w : weights_) {
    if (w < 0) throw InvalidArgument("weights must be nonnegative");
  }
}

bool ParityInstance::IsFeasible(std::span<const int> chosen) const {
  std::vector<ElementId> un;
  un.reserve(chosen.size() * k_);
  for (int j : chosen) {
    if (j < 0 || j >= set_count()) {
      throw InvalidArgument("parity set index " + std::to_string(j) +
                            " out of range");
    }
    un.insert(un.end(), sets_[j].begin(), sets_[j].end());
  }
  // IsIndependent rejects repeated ids, which catches repeated indices.
  return matroid_.IsIndependent(un);
}

Weight ParityInstance::TotalWeight(std::span<const int> chosen) const {
  Weight total = 0;
  for (int j : chosen) total += weights_.at(j);
  return total;
}

const char* CopyRoleName(CopyRole role) {
  switch (role) {
    case CopyRole::kMatroidCopy:
      return "matroid";
    case CopyRole::kHyperedgeCopy:
      return "hyperedge";
    case CopyRole::kDummy:
      return "dummy";
  }
  return "unknown";
}

ReductionCertificate ReduceDbmisToParity(const DbmisInstance& instance) {
  const ElementSet& ground = instance.ground();
  const int n = static_cast<int>(ground.size());
  const int delta = instance.degree();

  ReductionCertificate cert;
  cert.source = instance;
  std::vector<ElementSet> sets(n);
  ElementId next = 0;

  std::vector<ElementId> matroid_copy(n);
  for (int i = 0; i < n; ++i) {
    matroid_copy[i] = next++;
    sets[i].push_back(matroid_copy[i]);
    cert.roles.push_back({CopyRole::kMatroidCopy, ground[i], -1});
  }
  std::vector<MatroidOracle> parts;
  parts.push_back(MakeCopy(instance.matroid(), matroid_copy));

  const auto& hyperedges = instance.hyperedges();
  for (std::size_t h = 0; h < hyperedges.size(); ++h) {
    ElementSet copies;
    for (ElementId v : hyperedges[h].members) {
      copies.push_back(next);
      sets[instance.PositionOf(v)].push_back(next);
      cert.roles.push_back({CopyRole::kHyperedgeCopy, v, static_cast<int>(h)});
      ++next;
    }
    parts.push_back(MakeUniform(std::move(copies), hyperedges[h].bound));
  }

  for (int i = 0; i < n; ++i) {
    const int dummies =
        delta - static_cast<int>(instance.incident(ground[i]).size());
    ElementSet d;
    for (int j = 0; j < dummies; ++j) {
      d.push_back(next);
      sets[i].push_back(next);
      cert.roles.push_back({CopyRole::kDummy, ground[i], -1});
      ++next;
    }
    parts.push_back(MakeFree(std::move(d)));
  }

  cert.target = ParityInstance(MakeDirectSum(std::move(parts)), std::move(sets),
                               delta + 1, instance.weights());
  cert.set_of.resize(n);
  std::iota(cert.set_of.begin(), cert.set_of.end(), 0);
  cert.element_of = ground;
  return cert;
}

ElementSet LiftSolution(const ReductionCertificate& cert,
                        std::span<const int> chosen) {
  bool feasible = false;
  try {
    feasible = cert.target.IsFeasible(chosen);
  } catch (const InvalidArgument& e) {
    throw ContractViolation(std::string("lift: ") + e.what());
  }
  if (!feasible) {
    throw ContractViolation("lift: chosen parity sets are not independent");
  }
  ElementSet out;
  for (int j : chosen) out.push_back(cert.element_of[j]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> PushSolution(const ReductionCertificate& cert,
                              std::span<const ElementId> feasible) {
  bool ok = false;
  try {
    ok = cert.source.IsFeasible(feasible);
  } catch (const InvalidArgument& e) {
    throw ContractViolation(std::string("push: ") + e.what());
  }
  if (!ok) throw ContractViolation("push: source set is infeasible");
  std::vector<int> out;
  for (ElementId v : feasible) {
    out.push_back(cert.set_of[cert.source.PositionOf(v)]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> SolveParityExact(const ParityInstance& p,
                                  const ExactOptions& options) {
  return MaxWeightDownwardClosed(
      p.weights(),
      [&](const std::vector<int>& chosen) { return p.IsFeasible(chosen); },
      options, "exact parity solver");
}

namespace {

// Set indices sorted by descending weight, ties by index.
std::vector<int> ByDescendingWeight(std::span<const Weight> weights,
                                    std::vector<int> items) {
  std::stable_sort(items.begin(), items.end(), [&](int a, int b) {
    return weights[a] > weights[b];
  });
  return items;
}

}  // namespace

std::vector<int> SolveParityGreedy(const ParityInstance& p) {
  std::vector<int> all(p.set_count());
  std::iota(all.begin(), all.end(), 0);
  std::vector<int> chosen;
  for (int j : ByDescendingWeight(p.weights(), all)) {
    chosen.push_back(j);
    std::vector<int> sorted = chosen;
    std::sort(sorted.begin(), sorted.end());
    if (!p.IsFeasible(sorted)) chosen.pop_back();
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

std::vector<int> SolveParityLocal(const ParityInstance& p, int t,
                                  LocalSearchStats* stats) {
  if (t < 1) throw InvalidArgument("exchange size t must be >= 1");
  std::vector<int> chosen = SolveParityGreedy(p);
  Weight current = p.TotalWeight(chosen);
  if (stats) stats->history.push_back(current);
  const auto& w = p.weights();

  while (true) {
    std::vector<int> unchosen;
    for (int j = 0; j < p.set_count(); ++j) {
      if (!std::binary_search(chosen.begin(), chosen.end(), j)) {
        unchosen.push_back(j);
      }
    }
    unchosen = ByDescendingWeight(w, std::move(unchosen));
    const int u = static_cast<int>(unchosen.size());
    const int c = static_cast<int>(chosen.size());

    std::vector<int> next;
    bool improved = false;
    for (int a = 1; a <= std::min(t, u) && !improved; ++a) {
      improved = ForEachCombination(u, a, [&](std::span<const int> add) {
        Weight gain = 0;
        for (int i : add) gain += w[unchosen[i]];
        for (int r = 0; r <= std::min(t, c); ++r) {
          bool hit = ForEachCombination(c, r, [&](std::span<const int> rem) {
            Weight loss = 0;
            for (int i : rem) loss += w[chosen[i]];
            if (loss >= gain) return false;
            std::vector<int> candidate;
            std::size_t ri = 0;
            for (int i = 0; i < c; ++i) {
              if (ri < rem.size() && rem[ri] == i) {
                ++ri;
              } else {
                candidate.push_back(chosen[i]);
              }
            }
            for (int i : add) candidate.push_back(unchosen[i]);
            std::sort(candidate.begin(), candidate.end());
            if (!p.IsFeasible(candidate)) return false;
            next = std::move(candidate);
            return true;
          });
          if (hit) return true;
        }
        return false;
      });
    }
    if (!improved) break;
    chosen = std::move(next);
    current = p.TotalWeight(chosen);
    if (stats) {
      ++stats->moves;
      stats->history.push_back(current);
    }
  }
  return chosen;
}

}  // namespace dbmis
