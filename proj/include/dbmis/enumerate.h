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

#ifndef DBMIS_ENUMERATE_H_
#define DBMIS_ENUMERATE_H_

#include <algorithm>
#include <span>
#include <string>
#include <vector>

#include "dbmis/common.h"

namespace dbmis {

// Calls f(indices) for every r-subset of {0..n-1} in lexicographic order.
// Stops early and returns true as soon as f returns true.
template <typename F>
bool ForEachCombination(int n, int r, F&& f) {
  if (r < 0 || r > n) return false;
  std::vector<int> idx(r);
  for (int i = 0; i < r; ++i) idx[i] = i;
  while (true) {
    if (f(std::span<const int>(idx))) return true;
    int i = r - 1;
    while (i >= 0 && idx[i] == n - r + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Maximum-weight member of a downward-closed family over items 0..n-1,
// found by depth-first enumeration that never extends an infeasible set.
// `feasible` receives ascending item vectors. Ties are broken toward the
// lexicographically smallest item vector. Throws ResourceLimit if n
// exceeds the cap.
template <typename Feasible>
std::vector<int> MaxWeightDownwardClosed(std::span<const Weight> weights,
                                         Feasible&& feasible,
                                         const ExactOptions& options,
                                         const char* what) {
  const int n = static_cast<int>(weights.size());
  if (n > options.max_items) {
    throw ResourceLimit(std::string(what) + ": " + std::to_string(n) +
                        " items exceed the enumeration cap of " +
                        std::to_string(options.max_items));
  }
  std::vector<Weight> suffix(n + 1, 0);
  for (int i = n - 1; i >= 0; --i) suffix[i] = suffix[i + 1] + weights[i];

  std::vector<int> current;
  std::vector<int> best;
  Weight best_weight = 0;
  auto visit = [&](auto&& self, int i, Weight w) -> void {
    if (w + suffix[i] < best_weight) return;
    if (i == n) {
      if (w > best_weight || (w == best_weight && current < best)) {
        best_weight = w;
        best = current;
      }
      return;
    }
    current.push_back(i);
    if (feasible(static_cast<const std::vector<int>&>(current))) {
      self(self, i + 1, w + weights[i]);
    }
    current.pop_back();
    self(self, i + 1, w);
  };
  visit(visit, 0, 0);
  return best;
}

}  // namespace dbmis

#endif  // DBMIS_ENUMERATE_H_
