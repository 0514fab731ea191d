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

#ifndef DBMIS_PARITY_H_
#define DBMIS_PARITY_H_

#include <span>
#include <vector>

#include "dbmis/common.h"
#include "dbmis/instance.h"
#include "dbmis/matroid.h"

namespace dbmis {

// Matroid k-parity: pick a subcollection of pairwise disjoint k-element
// sets whose union is independent, maximizing total set weight. Solutions
// are ascending vectors of set indices.
class ParityInstance {
 public:
  ParityInstance() = default;
  // `weights` is aligned with `sets`; empty means unit weights.
  ParityInstance(MatroidOracle matroid, std::vector<ElementSet> sets, int k,
                 std::vector<Weight> weights = {});

  const MatroidOracle& matroid() const { return matroid_; }
  const std::vector<ElementSet>& sets() const { return sets_; }
  int k() const { return k_; }
  const std::vector<Weight>& weights() const { return weights_; }
  int set_count() const { return static_cast<int>(sets_.size()); }

  bool IsFeasible(std::span<const int> chosen) const;
  Weight TotalWeight(std::span<const int> chosen) const;

 private:
  MatroidOracle matroid_;
  std::vector<ElementSet> sets_;
  int k_ = 1;
  std::vector<Weight> weights_;
};

enum class CopyRole { kMatroidCopy, kHyperedgeCopy, kDummy };

const char* CopyRoleName(CopyRole role);

struct CopyInfo {
  CopyRole role = CopyRole::kMatroidCopy;
  ElementId source = 0;
  // Hyperedge index for kHyperedgeCopy, otherwise -1.
  int hyperedge = -1;
};

// Output of the reduction to (Delta+1)-parity together with the maps needed
// to move solutions in both directions.
struct ReductionCertificate {
  DbmisInstance source;
  ParityInstance target;
  // set_of[i] is the parity set standing for source.ground()[i]; parity set
  // j stands for element_of[j]. The reduction emits set i for ground
  // position i, so both maps are positional.
  std::vector<int> set_of;
  std::vector<ElementId> element_of;
  // Indexed by target element id (the target ground is 0..|V'|-1).
  std::vector<CopyInfo> roles;
};

// Every element v becomes a parity set of size Delta+1: a copy of v in a
// copy of the matroid, one copy per hyperedge through v in a uniform
// matroid of rank g(e), and Delta - deg(v) free dummies.
//
// Target ids: matroid copies first (ground order), then hyperedge copies
// (hyperedge order, then member order), then dummies grouped by source
// element in ground order.
ReductionCertificate ReduceDbmisToParity(const DbmisInstance& instance);

// Maps a feasible parity solution back to a feasible source set of equal
// weight. Throws ContractViolation if `chosen` is infeasible in the target.
ElementSet LiftSolution(const ReductionCertificate& cert,
                        std::span<const int> chosen);

// Maps a feasible source set to a feasible parity solution of equal weight.
// Throws ContractViolation if `feasible` is infeasible in the source.
std::vector<int> PushSolution(const ReductionCertificate& cert,
                              std::span<const ElementId> feasible);

// Maximum-weight feasible subcollection by pruned enumeration; ties go to
// the lexicographically smallest index vector. Throws ResourceLimit when
// there are more than options.max_items sets.
std::vector<int> SolveParityExact(const ParityInstance& p,
                                  const ExactOptions& options = {});

// Scans sets by descending weight (ties by index), keeping each one that
// stays feasible.
std::vector<int> SolveParityGreedy(const ParityInstance& p);

// Local search seeded with SolveParityGreedy. A move removes up to t chosen
// sets and adds up to t unchosen ones; it is taken when the result is
// feasible and strictly heavier. Additions are scanned by descending
// weight, removals smallest-first, and the first improving move wins.
std::vector<int> SolveParityLocal(const ParityInstance& p, int t,
                                  LocalSearchStats* stats = nullptr);

}  // namespace dbmis

#endif  // DBMIS_PARITY_H_
