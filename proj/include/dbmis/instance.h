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

#ifndef DBMIS_INSTANCE_H_
#define DBMIS_INSTANCE_H_

#include <span>
#include <vector>

#include "dbmis/common.h"
#include "dbmis/matroid.h"

namespace dbmis {

struct Hyperedge {
  ElementSet members;
  int bound = 0;
};

// A degree bounded matroid independent set instance: a matroid, a
// hypergraph on the same ground set with an upper bound per hyperedge, and
// a nonnegative integer weight per element. Feasible sets are the
// independent sets meeting every hyperedge at most bound times.
//
// Hyperedges with bound 0 are kept (they forbid their members) and
// duplicate hyperedges count separately toward the degree.
class DbmisInstance {
 public:
  DbmisInstance() = default;
  // `weights` is aligned with matroid.ground(); empty means unit weights.
  DbmisInstance(MatroidOracle matroid, std::vector<Hyperedge> hyperedges,
                std::vector<Weight> weights = {});

  const MatroidOracle& matroid() const { return matroid_; }
  const ElementSet& ground() const { return matroid_.ground(); }
  const std::vector<Hyperedge>& hyperedges() const { return hyperedges_; }
  const std::vector<Weight>& weights() const { return weights_; }

  Weight weight(ElementId id) const;
  Weight TotalWeight(std::span<const ElementId> s) const;

  // Indices of the hyperedges containing `id`, ascending.
  const std::vector<int>& incident(ElementId id) const;

  // Maximum number of hyperedges containing a single element.
  int degree() const { return degree_; }

  bool HasUnitBounds() const;
  bool HasUnitWeights() const;

  bool IsFeasible(std::span<const ElementId> s) const;

  // Position of `id` in ground(); throws InvalidArgument if absent.
  int PositionOf(ElementId id) const;

 private:
  MatroidOracle matroid_;
  std::vector<Hyperedge> hyperedges_;
  std::vector<Weight> weights_;
  std::vector<std::vector<int>> incidence_;
  int degree_ = 0;
};

}  // namespace dbmis

#endif  // DBMIS_INSTANCE_H_
