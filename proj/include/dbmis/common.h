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

#ifndef DBMIS_COMMON_H_
#define DBMIS_COMMON_H_

#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace dbmis {

using ElementId = int;
using Weight = std::int64_t;

// Sorted ascending, no duplicates.
using ElementSet = std::vector<ElementId>;

// Bound value meaning "no constraint". Stored as -1 in instance files.
inline constexpr int kUnbounded = std::numeric_limits<int>::max();

// Bad input: unknown ids, loops, overlapping parts, malformed files.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A caller broke a documented precondition on a solution object.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// An exact (enumerative) solver was asked to exceed its configured cap.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Limits for the brute-force solvers. The default keeps enumeration under
// about a million leaves.
struct ExactOptions {
  int max_items = 20;
};

// Statistics recorded by the local-search solvers.
struct LocalSearchStats {
  int moves = 0;
  // Objective value after seeding and after every accepted move.
  std::vector<Weight> history;
};

// Returns a sorted copy of `ids`; throws InvalidArgument on duplicates.
ElementSet ToElementSet(std::span<const ElementId> ids);

// Members of `all` selected by the bits of `mask` (bit i selects all[i]).
ElementSet SubsetFromMask(std::span<const ElementId> all, std::uint64_t mask);

std::string FormatSet(std::span<const ElementId> ids);

}  // namespace dbmis

#endif  // DBMIS_COMMON_H_
