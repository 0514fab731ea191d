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

#ifndef DBMIS_EXPERIMENT_H_
#define DBMIS_EXPERIMENT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dbmis/common.h"

namespace dbmis {

// Exact nonnegative rational, always in lowest terms with a positive
// denominator. Wide enough to hold the exact mean of a few thousand
// ratios with small denominators.
class Rational {
 public:
  Rational() = default;
  Rational(__int128 num, __int128 den);

  __int128 num() const { return num_; }
  __int128 den() const { return den_; }

  Rational operator+(const Rational& other) const;
  Rational operator/(__int128 divisor) const;

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return !(b < a);
  }

  // "p/q"; integers are still rendered with a denominator ("1/1").
  std::string ToString() const;
  double ToDouble() const;

 private:
  __int128 num_ = 0;
  __int128 den_ = 1;
};

struct ExperimentRow {
  int id = 0;  // trial index
  std::uint64_t seed = 0;
  std::string solver;
  std::string params;  // "key=value" pairs separated by spaces
  int size = 0;
  Weight weight = 0;
  std::optional<Weight> optimum;
  // weight / optimum; 1/1 when the optimum is 0.
  Rational ratio;
  // Hard-asserted lower bound on the ratio, if the solver has one here.
  std::optional<Rational> bound;
  bool violation = false;
};

struct SolverSummary {
  std::string solver;
  int rows = 0;
  Rational min_ratio;
  Rational mean_ratio;
  int violations = 0;
  // Report-only empirical target; never counted as a violation.
  std::optional<Rational> target;
};

struct ExperimentReport {
  std::string suite;
  std::uint64_t seed = 0;
  int trials = 0;
  std::vector<ExperimentRow> rows;  // sorted by (id, solver position)
  std::vector<SolverSummary> summaries;
  int violations = 0;
};

struct SuiteOptions {
  std::string suite;
  int trials = 100;
  std::uint64_t seed = 1;
  // Number of worker threads; the report does not depend on it.
  int jobs = 1;
};

// Suites (instance sizes stay within the exact oracles' limits):
//   greedy           solve_greedy on unit-weight DBMIS, bound 1/(Delta+1)
//   exchange         p-exchange, p = 1 + id mod 3, unit bounds, Delta <= 3,
//                    weights 1..5, bound 1/(max(Delta, 1) + 1/p)
//   bundled          algorithm1 on <= 10 edges, <= 3 colors, bound 1/3
//   small-colors-k2  small_colors with 2 colors, bound 3/4
//   small-colors-k3  small_colors with 3 colors, bound 1/2
//   parity           via-parity (t = 2) on unweighted Delta <= 2 DBMIS,
//                    bound 1/3, report-only target 33/50
//   branching        greedy (bound 1/4) and via-parity (target 1/2) on the
//                    DBMIS reduction of random colored digraphs, against the
//                    exact colored-branching optimum
std::vector<std::string> SuiteNames();

// Throws InvalidArgument on an unknown suite or trials < 0, and
// ResourceLimit if an instance exceeds an oracle cap.
ExperimentReport RunRatioSuite(const SuiteOptions& options);

// One header line plus one line per row.
std::string RenderReportCsv(const ExperimentReport& report);
// "v1 report" followed by key/value lines, summaries and rows.
std::string RenderReportText(const ExperimentReport& report);

}  // namespace dbmis

#endif  // DBMIS_EXPERIMENT_H_
