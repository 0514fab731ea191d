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

#ifndef DBMIS_RANDOM_H_
#define DBMIS_RANDOM_H_

#include <cstdint>

namespace dbmis {

// SplitMix64 (Steele, Lea and Flood). Every draw is defined bit for bit so
// that generated fixtures are reproducible in any language:
//
//   state += 0x9E3779B97F4A7C15
//   z = state
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   return z ^ (z >> 31)
//
// UniformBelow(n) rejects draws below (2^64 - n) mod n and returns the
// draw mod n. Chance(num, den) is UniformBelow(den) < num.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t Next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n); n must be positive.
  std::uint64_t UniformBelow(std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n;
    while (true) {
      std::uint64_t x = Next();
      if (x >= threshold) return x % n;
    }
  }

  // Uniform in [lo, hi].
  int UniformInt(int lo, int hi) {
    return lo + static_cast<int>(UniformBelow(
                    static_cast<std::uint64_t>(hi - lo) + 1));
  }

  bool Chance(std::uint64_t num, std::uint64_t den) {
    return UniformBelow(den) < num;
  }

 private:
  std::uint64_t state_;
};

// Seed for trial `index` of a run seeded with `seed`: the first output of
// SplitMix64(seed ^ (index * 0xD1B54A32D192ED03)).
inline std::uint64_t DeriveSeed(std::uint64_t seed, std::uint64_t index) {
  return SplitMix64(seed ^ (index * 0xD1B54A32D192ED03ULL)).Next();
}

}  // namespace dbmis

#endif  // DBMIS_RANDOM_H_
