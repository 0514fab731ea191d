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

#ifndef DBMIS_MATROID_H_
#define DBMIS_MATROID_H_

#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "dbmis/common.h"

namespace dbmis {

enum class MatroidKind {
  kGraphic,
  kUniform,
  kFree,
  kPartition,
  kDirectSum,
  kRestriction,
  kCopy,
};

const char* MatroidKindName(MatroidKind kind);

// An independence oracle over a finite set of integer element ids.
//
// Oracles are immutable values that share their structure, so copying one
// is cheap and concurrent queries from several threads are safe. Every
// query validates its argument: ids outside the ground set or repeated ids
// raise InvalidArgument.
//
// The kind-specific accessors expose the construction so that oracles can
// be serialized; calling an accessor that does not match kind() throws
// std::logic_error.
class MatroidOracle {
 public:
  // The free matroid on the empty ground set.
  MatroidOracle();

  MatroidKind kind() const;
  const ElementSet& ground() const;
  bool Contains(ElementId id) const;

  bool IsIndependent(std::span<const ElementId> s) const;

  // Size of a maximal independent subset of `s`, grown greedily in
  // ascending id order.
  int Rank(std::span<const ElementId> s) const;

  // kGraphic: element i is edge i.
  int graph_vertices() const;
  const std::vector<std::pair<int, int>>& graph_edges() const;
  // kUniform.
  int uniform_rank() const;
  // kPartition. Ground elements outside every part are unconstrained.
  const std::vector<ElementSet>& parts() const;
  const std::vector<int>& capacities() const;
  // kDirectSum. Never contains a nested direct sum.
  const std::vector<MatroidOracle>& children() const;
  // kRestriction and kCopy.
  const MatroidOracle& base() const;
  // kCopy: copy_sources()[i] is the base element relabeled as ground()[i].
  const std::vector<ElementId>& copy_sources() const;

  struct Node;

 private:
  explicit MatroidOracle(std::shared_ptr<const Node> node);
  bool IndependentUnchecked(std::span<const ElementId> s) const;

  std::shared_ptr<const Node> node_;

  friend MatroidOracle MakeGraphic(int, std::span<const std::pair<int, int>>);
  friend MatroidOracle MakeUniform(ElementSet, int);
  friend MatroidOracle MakeFree(ElementSet);
  friend MatroidOracle MakePartition(ElementSet, std::vector<ElementSet>,
                                     std::vector<int>);
  friend MatroidOracle MakeDirectSum(std::vector<MatroidOracle>);
  friend MatroidOracle MakeRestriction(MatroidOracle, ElementSet);
  friend MatroidOracle MakeCopy(MatroidOracle, std::vector<ElementId>);
};

// Graphic matroid of a loopless multigraph; element i is edges[i]. Loops and
// out-of-range endpoints are rejected.
MatroidOracle MakeGraphic(int vertices,
                          std::span<const std::pair<int, int>> edges);

MatroidOracle MakeUniform(ElementSet ground, int rank);

MatroidOracle MakeFree(ElementSet ground);

// Partition matroid on `ground`: a set is independent iff it has at most
// capacities[j] elements of parts[j] for every j. Parts must be pairwise
// disjoint subsets of the ground set.
MatroidOracle MakePartition(ElementSet ground, std::vector<ElementSet> parts,
                            std::vector<int> capacities);

// As above with the ground set taken to be the union of the parts.
MatroidOracle MakePartition(std::vector<ElementSet> parts,
                            std::vector<int> capacities);

// Direct sum of matroids on pairwise disjoint ground sets. Nested sums are
// flattened.
MatroidOracle MakeDirectSum(std::vector<MatroidOracle> children);

// base restricted to `allowed`, which must be a subset of base's ground.
MatroidOracle MakeRestriction(MatroidOracle base, ElementSet allowed);

// Isomorphic copy of `base`: new_ids[i] takes the role of
// base.ground()[i]. The new ids must be distinct and nonnegative.
MatroidOracle MakeCopy(MatroidOracle base, std::vector<ElementId> new_ids);

}  // namespace dbmis

#endif  // DBMIS_MATROID_H_
