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

#include "dbmis/experiment.h"

#include <string>

#include "doctest.h"

namespace dbmis {
namespace {

TEST_CASE("rationals stay exact and reduced") {
  CHECK(Rational(2, 4).ToString() == "1/2");
  CHECK(Rational(0, 5).ToString() == "0/1");
  CHECK(Rational(3, -6).ToString() == "-1/2");
  CHECK((Rational(1, 3) + Rational(1, 6)).ToString() == "1/2");
  CHECK((Rational(3, 4) / 3).ToString() == "1/4");
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(2, 6) == Rational(1, 3));
  CHECK(Rational(1, 3) <= Rational(2, 6));
  CHECK_THROWS_AS(Rational(1, 0), InvalidArgument);
  // The exact mean of 1/k for k = 1..40 needs more than 64 bits.
  Rational sum(0, 1);
  for (int k = 1; k <= 40; ++k) sum = sum + Rational(1, k);
  CHECK(sum.ToDouble() == doctest::Approx(4.278543));
}

TEST_CASE("empty suites") {
  for (const std::string& name : SuiteNames()) {
    ExperimentReport r = RunRatioSuite({name, 0, 3, 1});
    CHECK(r.rows.empty());
    CHECK(r.violations == 0);
  }
  CHECK_THROWS_AS(RunRatioSuite({"nope", 1, 1, 1}), InvalidArgument);
  CHECK_THROWS_AS(RunRatioSuite({"bundled", -1, 1, 1}), InvalidArgument);
  CHECK_THROWS_AS(RunRatioSuite({"bundled", 1, 1, 0}), InvalidArgument);
}

TEST_CASE("reports do not depend on the number of workers") {
  for (const std::string& name : SuiteNames()) {
    ExperimentReport one = RunRatioSuite({name, 40, 11, 1});
    ExperimentReport four = RunRatioSuite({name, 40, 11, 4});
    CHECK(RenderReportText(one) == RenderReportText(four));
    CHECK(RenderReportCsv(one) == RenderReportCsv(four));
    CHECK(one.violations == 0);
    for (std::size_t i = 1; i < one.rows.size(); ++i) {
      CHECK(one.rows[i - 1].id <= one.rows[i].id);
    }
  }
}

TEST_CASE("violations count rows below their hard bound") {
  ExperimentReport r = RunRatioSuite({"branching", 30, 5, 2});
  CHECK(r.rows.size() == 60);
  int below = 0;
  for (const ExperimentRow& row : r.rows) {
    if (row.bound && row.ratio < *row.bound) ++below;
    CHECK(row.violation == (row.bound && row.ratio < *row.bound));
    if (row.solver == "via-parity") CHECK_FALSE(row.bound.has_value());
  }
  CHECK(r.violations == below);
  CHECK(r.summaries.size() == 2);
  CHECK(r.summaries[1].target.has_value());
}

TEST_CASE("rendered reports contain no floating-point numbers") {
  ExperimentReport r = RunRatioSuite({"exchange", 25, 2, 1});
  const std::string csv = RenderReportCsv(r);
  const std::string text = RenderReportText(r);
  CHECK(csv.rfind("id,seed,solver,params,size,weight,optimum,ratio,bound,"
                  "violation\n", 0) == 0);
  CHECK(text.rfind("v1 report\n", 0) == 0);
  CHECK(csv.find('.') == std::string::npos);
  CHECK(text.find('.') == std::string::npos);
}

}  // namespace
}  // namespace dbmis
