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

#include "dbmis/common.h"

#include <algorithm>
#include <sstream>

namespace dbmis {

ElementSet ToElementSet(std::span<const ElementId> ids) {
  ElementSet out(ids.begin(), ids.end());
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) {
    throw InvalidArgument("duplicate id in set " + FormatSet(ids));
  }
  return out;
}

ElementSet SubsetFromMask(std::span<const ElementId> all, std::uint64_t mask) {
  ElementSet out;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (mask >> i & 1) out.push_back(all[i]);
  }
  return out;
}

std::string FormatSet(std::span<const ElementId> ids) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) os << ',';
    os << ids[i];
  }
  os << '}';
  return os.str();
}

}  // namespace dbmis
