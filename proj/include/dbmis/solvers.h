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

#ifndef DBMIS_SOLVERS_H_
#define DBMIS_SOLVERS_H_

#include <optional>

#include "dbmis/common.h"
#include "dbmis/instance.h"

namespace dbmis {

// Maximum-weight feasible set by enumeration that never extends an
// infeasible set. Ties go to the lexicographically smallest id set.
ElementSet SolveExact(const DbmisInstance& instance,
                      const ExactOptions& options = {});

// Scans elements by descending weight (ties by id) and keeps each one that
// leaves the set feasible. Feasible sets form a (Delta+1)-extendible
// system, so for unit weights the result has at least OPT/(Delta+1)
// elements.
ElementSet SolveGreedy(const DbmisInstance& instance);

struct PExchangeOptions {
  int p = 1;
  // Maximum number of removals per move; defaults to p * Delta + 1.
  std::optional<int> removal_cap;
};

// p-exchange local search for instances with all hyperedge bounds <= 1,
// seeded with SolveGreedy. A move adds a set A of at most p new elements,
// removes a set R of at most removal_cap current elements, and is taken
// when the result is feasible and w(A) > w(R). Additions are scanned by
// descending weight and removals smallest-first; the first improving move
// wins. A p-local optimum satisfies (Delta + 1/p) * w(S) >= w(OPT); pick
// p = ceil(1/eps) for a 1/(Delta + eps) guarantee.
//
// Throws InvalidArgument if some bound exceeds 1 or p < 1.
ElementSet SolvePExchange(const DbmisInstance& instance,
                          const PExchangeOptions& options,
                          LocalSearchStats* stats = nullptr);

// Reduction to (Delta+1)-parity, SolveParityLocal(t), then lift.
ElementSet SolveViaParity(const DbmisInstance& instance, int t,
                          LocalSearchStats* stats = nullptr);

}  // namespace dbmis

#endif  // DBMIS_SOLVERS_H_
