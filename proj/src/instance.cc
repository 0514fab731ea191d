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

#include "dbmis/instance.h"

#include <algorithm>
#include <string>

namespace dbmis {

DbmisInstance::DbmisInstance(MatroidOracle matroid,
                             std::vector<Hyperedge> hyperedges,
                             std::vector<Weight> weights)
    : matroid_(std::move(matroid)),
      hyperedges_(std::move(hyperedges)),
      weights_(std::move(weights)) {
  const std::size_t n = matroid_.ground().size();
  if (weights_.empty()) weights_.assign(n, 1);
  if (weights_.size() != n) {
    throw InvalidArgument("expected " + std::to_string(n) + " weights, got " +
                          std::to_string(weights_.size()));
  }
  for (Weight w : weights_) {
    if (w < 0) throw InvalidArgument("weights must be nonnegative");
  }
  incidence_.assign(n, {});
  for (std::size_t h = 0; h < hyperedges_.size(); ++h) {
    Hyperedge& e = hyperedges_[h];
    if (e.bound < 0) throw InvalidArgument("hyperedge bounds must be >= 0");
    e.members = ToElementSet(e.members);
    for (ElementId id : e.members) {
      incidence_[PositionOf(id)].push_back(static_cast<int>(h));
    }
  }
  for (const auto& inc : incidence_) {
    degree_ = std::max(degree_, static_cast<int>(inc.size()));
  }
}

int DbmisInstance::PositionOf(ElementId id) const {
  const ElementSet& g = matroid_.ground();
  auto it = std::lower_bound(g.begin(), g.end(), id);
  if (it == g.end() || *it != id) {
    throw InvalidArgument("element " + std::to_string(id) +
                          " is not in the ground set");
  }
  return static_cast<int>(it - g.begin());
}

Weight DbmisInstance::weight(ElementId id) const {
  return weights_[PositionOf(id)];
}

Weight DbmisInstance::TotalWeight(std::span<const ElementId> s) const {
  Weight total = 0;
  for (ElementId id : s) total += weight(id);
  return total;
}

const std::vector<int>& DbmisInstance::incident(ElementId id) const {
  return incidence_[PositionOf(id)];
}

bool DbmisInstance::HasUnitBounds() const {
  return std::all_of(hyperedges_.begin(), hyperedges_.end(),
                     [](const Hyperedge& e) { return e.bound <= 1; });
}

bool DbmisInstance::HasUnitWeights() const {
  return std::all_of(weights_.begin(), weights_.end(),
                     [](Weight w) { return w == 1; });
}

bool DbmisInstance::IsFeasible(std::span<const ElementId> s) const {
  if (!matroid_.IsIndependent(s)) return false;
  std::vector<int> load(hyperedges_.size(), 0);
  for (ElementId id : s) {
    for (int h : incidence_[PositionOf(id)]) {
      if (++load[h] > hyperedges_[h].bound) return false;
    }
  }
  return true;
}

}  // namespace dbmis
