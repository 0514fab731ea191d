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

#include "dbmis/matroid.h"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

namespace dbmis {

struct MatroidOracle::Node {
  MatroidKind kind = MatroidKind::kFree;
  ElementSet ground;
  // index[id] = position of id in ground, or -1.
  std::vector<int> index;

  int vertices = 0;
  std::vector<std::pair<int, int>> edges;
  int rank = 0;
  std::vector<ElementSet> parts;
  std::vector<int> capacities;
  std::vector<MatroidOracle> children;
  std::vector<MatroidOracle> base;  // zero or one entry
  std::vector<ElementId> copy_sources;
  // Per ground position: part index (partition), child index (direct sum),
  // or -1.
  std::vector<int> owner;

  void BuildIndex() {
    int max_id = ground.empty() ? -1 : ground.back();
    index.assign(static_cast<std::size_t>(max_id + 1), -1);
    for (std::size_t i = 0; i < ground.size(); ++i) {
      index[ground[i]] = static_cast<int>(i);
    }
  }

  int Position(ElementId id) const {
    if (id < 0 || static_cast<std::size_t>(id) >= index.size()) return -1;
    return index[id];
  }
};

namespace {

using Node = MatroidOracle::Node;

void RequireGround(const ElementSet& ground) {
  if (!ground.empty() && ground.front() < 0) {
    throw InvalidArgument("element ids must be nonnegative");
  }
}

// Union-find with path halving; sized per query.
class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int Find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  bool Union(int a, int b) {
    a = Find(a);
    b = Find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

const char* MatroidKindName(MatroidKind kind) {
  switch (kind) {
    case MatroidKind::kGraphic:
      return "graphic";
    case MatroidKind::kUniform:
      return "uniform";
    case MatroidKind::kFree:
      return "free";
    case MatroidKind::kPartition:
      return "partition";
    case MatroidKind::kDirectSum:
      return "direct_sum";
    case MatroidKind::kRestriction:
      return "restriction";
    case MatroidKind::kCopy:
      return "copy";
  }
  return "unknown";
}

MatroidOracle::MatroidOracle() : node_(std::make_shared<const Node>()) {}

MatroidOracle::MatroidOracle(std::shared_ptr<const Node> node)
    : node_(std::move(node)) {}

MatroidKind MatroidOracle::kind() const { return node_->kind; }

const ElementSet& MatroidOracle::ground() const { return node_->ground; }

bool MatroidOracle::Contains(ElementId id) const {
  return node_->Position(id) >= 0;
}

bool MatroidOracle::IsIndependent(std::span<const ElementId> s) const {
  std::vector<char> seen(node_->ground.size(), 0);
  for (ElementId id : s) {
    int pos = node_->Position(id);
    if (pos < 0) {
      throw InvalidArgument("element " + std::to_string(id) +
                            " is not in the ground set");
    }
    if (seen[pos]) {
      throw InvalidArgument("element " + std::to_string(id) + " repeated");
    }
    seen[pos] = 1;
  }
  return IndependentUnchecked(s);
}

bool MatroidOracle::IndependentUnchecked(std::span<const ElementId> s) const {
  const Node& n = *node_;
  switch (n.kind) {
    case MatroidKind::kFree:
      return true;
    case MatroidKind::kUniform:
      return static_cast<int>(s.size()) <= n.rank;
    case MatroidKind::kGraphic: {
      DisjointSets sets(n.vertices);
      for (ElementId id : s) {
        const auto& [a, b] = n.edges[id];
        if (!sets.Union(a, b)) return false;
      }
      return true;
    }
    case MatroidKind::kPartition: {
      std::vector<int> used(n.parts.size(), 0);
      for (ElementId id : s) {
        int part = n.owner[n.Position(id)];
        if (part >= 0 && ++used[part] > n.capacities[part]) return false;
      }
      return true;
    }
    case MatroidKind::kDirectSum: {
      std::vector<std::vector<ElementId>> buckets(n.children.size());
      for (ElementId id : s) buckets[n.owner[n.Position(id)]].push_back(id);
      for (std::size_t c = 0; c < buckets.size(); ++c) {
        if (!buckets[c].empty() &&
            !n.children[c].IndependentUnchecked(buckets[c])) {
          return false;
        }
      }
      return true;
    }
    case MatroidKind::kRestriction:
      return n.base[0].IndependentUnchecked(s);
    case MatroidKind::kCopy: {
      std::vector<ElementId> mapped;
      mapped.reserve(s.size());
      for (ElementId id : s) mapped.push_back(n.copy_sources[n.Position(id)]);
      return n.base[0].IndependentUnchecked(mapped);
    }
  }
  return false;
}

int MatroidOracle::Rank(std::span<const ElementId> s) const {
  // Validates ids and duplicates.
  IsIndependent(s);
  ElementSet sorted(s.begin(), s.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<ElementId> current;
  for (ElementId id : sorted) {
    current.push_back(id);
    if (!IndependentUnchecked(current)) current.pop_back();
  }
  return static_cast<int>(current.size());
}

namespace {

const Node& Expect(const std::shared_ptr<const Node>& node, MatroidKind kind) {
  if (node->kind != kind) {
    throw std::logic_error(std::string("matroid is not of kind ") +
                           MatroidKindName(kind));
  }
  return *node;
}

}  // namespace

int MatroidOracle::graph_vertices() const {
  return Expect(node_, MatroidKind::kGraphic).vertices;
}

const std::vector<std::pair<int, int>>& MatroidOracle::graph_edges() const {
  return Expect(node_, MatroidKind::kGraphic).edges;
}

int MatroidOracle::uniform_rank() const {
  return Expect(node_, MatroidKind::kUniform).rank;
}

const std::vector<ElementSet>& MatroidOracle::parts() const {
  return Expect(node_, MatroidKind::kPartition).parts;
}

const std::vector<int>& MatroidOracle::capacities() const {
  return Expect(node_, MatroidKind::kPartition).capacities;
}

const std::vector<MatroidOracle>& MatroidOracle::children() const {
  return Expect(node_, MatroidKind::kDirectSum).children;
}

const MatroidOracle& MatroidOracle::base() const {
  if (node_->base.empty()) {
    throw std::logic_error("matroid has no base (not a restriction or copy)");
  }
  return node_->base[0];
}

const std::vector<ElementId>& MatroidOracle::copy_sources() const {
  return Expect(node_, MatroidKind::kCopy).copy_sources;
}

MatroidOracle MakeGraphic(int vertices,
                          std::span<const std::pair<int, int>> edges) {
  if (vertices < 0) throw InvalidArgument("negative vertex count");
  auto node = std::make_shared<Node>();
  node->kind = MatroidKind::kGraphic;
  node->vertices = vertices;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [a, b] = edges[i];
    if (a < 0 || b < 0 || a >= vertices || b >= vertices) {
      throw InvalidArgument("edge " + std::to_string(i) +
                            " has an endpoint out of range");
    }
    if (a == b) {
      throw InvalidArgument("edge " + std::to_string(i) + " is a loop");
    }
    node->edges.emplace_back(a, b);
    node->ground.push_back(static_cast<ElementId>(i));
  }
  node->BuildIndex();
  return MatroidOracle(std::move(node));
}

MatroidOracle MakeUniform(ElementSet ground, int rank) {
  if (rank < 0) throw InvalidArgument("negative uniform rank");
  auto node = std::make_shared<Node>();
  node->kind = MatroidKind::kUniform;
  node->ground = ToElementSet(ground);
  RequireGround(node->ground);
  node->rank = rank;
  node->BuildIndex();
  return MatroidOracle(std::move(node));
}

MatroidOracle MakeFree(ElementSet ground) {
  auto node = std::make_shared<Node>();
  node->kind = MatroidKind::kFree;
  node->ground = ToElementSet(ground);
  RequireGround(node->ground);
  node->BuildIndex();
  return MatroidOracle(std::move(node));
}

MatroidOracle MakePartition(ElementSet ground, std::vector<ElementSet> parts,
                            std::vector<int> capacities) {
  if (parts.size() != capacities.size()) {
    throw InvalidArgument("partition needs one capacity per part");
  }
  auto node = std::make_shared<Node>();
  node->kind = MatroidKind::kPartition;
  node->ground = ToElementSet(ground);
  RequireGround(node->ground);
  node->BuildIndex();
  node->owner.assign(node->ground.size(), -1);
  for (std::size_t j = 0; j < parts.size(); ++j) {
    if (capacities[j] < 0) throw InvalidArgument("negative part capacity");
    parts[j] = ToElementSet(parts[j]);
    for (ElementId id : parts[j]) {
      int pos = node->Position(id);
      if (pos < 0) {
        throw InvalidArgument("part element " + std::to_string(id) +
                              " is not in the ground set");
      }
      if (node->owner[pos] >= 0) {
        throw InvalidArgument("parts overlap at element " +
                              std::to_string(id));
      }
      node->owner[pos] = static_cast<int>(j);
    }
  }
  node->parts = std::move(parts);
  node->capacities = std::move(capacities);
  return MatroidOracle(std::move(node));
}

MatroidOracle MakePartition(std::vector<ElementSet> parts,
                            std::vector<int> capacities) {
  ElementSet ground;
  for (const auto& part : parts) ground.insert(ground.end(), part.begin(), part.end());
  std::sort(ground.begin(), ground.end());
  if (std::adjacent_find(ground.begin(), ground.end()) != ground.end()) {
    throw InvalidArgument("partition parts overlap");
  }
  return MakePartition(std::move(ground), std::move(parts),
                       std::move(capacities));
}

MatroidOracle MakeDirectSum(std::vector<MatroidOracle> children) {
  auto node = std::make_shared<Node>();
  node->kind = MatroidKind::kDirectSum;
  for (auto& child : children) {
    if (child.kind() == MatroidKind::kDirectSum) {
      for (const auto& grandchild : child.children()) {
        node->children.push_back(grandchild);
      }
    } else {
      node->children.push_back(std::move(child));
    }
  }
  std::vector<std::pair<ElementId, int>> owned;
  for (std::size_t c = 0; c < node->children.size(); ++c) {
    for (ElementId id : node->children[c].ground()) {
      owned.emplace_back(id, static_cast<int>(c));
    }
  }
  std::sort(owned.begin(), owned.end());
  for (std::size_t i = 0; i < owned.size(); ++i) {
    if (i > 0 && owned[i].first == owned[i - 1].first) {
      throw InvalidArgument("direct sum children share element " +
                            std::to_string(owned[i].first));
    }
    node->ground.push_back(owned[i].first);
    node->owner.push_back(owned[i].second);
  }
  node->BuildIndex();
  return MatroidOracle(std::move(node));
}

MatroidOracle MakeRestriction(MatroidOracle base, ElementSet allowed) {
  auto node = std::make_shared<Node>();
  node->kind = MatroidKind::kRestriction;
  node->ground = ToElementSet(allowed);
  for (ElementId id : node->ground) {
    if (!base.Contains(id)) {
      throw InvalidArgument("restriction element " + std::to_string(id) +
                            " is not in the base ground set");
    }
  }
  node->base.push_back(std::move(base));
  node->BuildIndex();
  return MatroidOracle(std::move(node));
}

MatroidOracle MakeCopy(MatroidOracle base, std::vector<ElementId> new_ids) {
  if (new_ids.size() != base.ground().size()) {
    throw InvalidArgument("copy needs exactly one new id per base element");
  }
  std::vector<std::pair<ElementId, ElementId>> relabel;
  for (std::size_t i = 0; i < new_ids.size(); ++i) {
    relabel.emplace_back(new_ids[i], base.ground()[i]);
  }
  std::sort(relabel.begin(), relabel.end());
  auto node = std::make_shared<Node>();
  node->kind = MatroidKind::kCopy;
  for (const auto& [fresh, old] : relabel) {
    node->ground.push_back(fresh);
    node->copy_sources.push_back(old);
  }
  node->ground = ToElementSet(node->ground);
  RequireGround(node->ground);
  node->base.push_back(std::move(base));
  node->BuildIndex();
  return MatroidOracle(std::move(node));
}

}  // namespace dbmis
