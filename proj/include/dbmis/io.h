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

#ifndef DBMIS_IO_H_
#define DBMIS_IO_H_

#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "dbmis/bmatching.h"
#include "dbmis/branching.h"
#include "dbmis/instance.h"
#include "dbmis/parity.h"
#include "dbmis/pcforest.h"

namespace dbmis {

// Line-oriented text format, all integers. The first line is
// "v1 <kind>"; '#' starts a comment. Bounds of -1 mean unbounded. See
// README.md for the grammar of each kind.
using AnyInstance =
    std::variant<DbmisInstance, EdgeColoredMultigraph, ColoredDigraph,
                 BMatchingInstance, ParityInstance,
                 HierarchicalBMatchingInstance>;

struct InstanceFile {
  AnyInstance instance;
  // Optional "mapping" section: (item in this instance, item in the
  // instance it was reduced from). Items are elements for dbmis, set
  // indices for parity and edge ids for hierarchical.
  std::vector<std::pair<int, int>> mapping;
  // Optional "roles" section of a parity file, indexed by element id.
  std::vector<CopyInfo> roles;
  // Optional "copies" section of a hierarchical file.
  std::vector<SplitVertex> copies;
};

const char* InstanceKind(const AnyInstance& instance);

std::string RenderInstance(const InstanceFile& file);
std::string RenderInstance(const AnyInstance& instance);

// Throws InvalidArgument with a diagnostic on malformed input.
InstanceFile ParseInstance(std::string_view text);

std::string RenderMatroid(const MatroidOracle& matroid);

struct Solution {
  std::string kind;    // instance kind the solution refers to
  std::string solver;  // solver name
  ElementSet items;    // elements, edge ids, arc ids or set indices
  Weight weight = 0;
  // For parity solutions with a mapping: the source elements.
  std::vector<int> lifted;
  bool has_lifted = false;
};

std::string RenderSolution(const Solution& solution);
Solution ParseSolution(std::string_view text);

}  // namespace dbmis

#endif  // DBMIS_IO_H_
