// Copyright 2026 The sccckit Authors
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

#include "sccckit/report.hpp"
#include "sccckit/suites.hpp"
#include "support.hpp"

using namespace testing;

TEST_CASE("empty report") {
  VerificationReport r;
  r.suite = "sccc";
  r.model = "fdhilb";
  CHECK(r.ok());
  CHECK(r.exit_code() == 0);
  const std::string text = emit_report(r, ReportFormat::Json);
  auto j = Json::parse(text);
  CHECK(j["schema"] == 1);
  CHECK(j["results"].empty());
  CHECK(j["ok"] == true);
  CHECK(parse_report(text) == r);
}

TEST_CASE("matrix literals") {
  auto f = rows(Q, ObjectExpr::gen("B", 3), {{1.0, 2i}, {3.0, 4.0}, {-1i, 0.5}});
  auto j = to_literal(f);
  CHECK(j["dom"] == "Q[2]");
  CHECK(j["cod"] == "B[3]");
  CHECK(j["entries"].size() == 6);
  CHECK(j["entries"][1][1] == 2.0);  // row-major
  CHECK(approx_equal(from_literal<C>(j), f, Tolerance::exact()));
  j["entries"].erase(0);
  CHECK_THROWS_AS(from_literal<C>(j), TypeMismatch);
  CHECK_THROWS_AS(from_literal<C>(Json::parse(R"({"dom": "Q[2]"})")), ParseError);

  auto psi = parse_state<C>("[[1,0],[0,1]]");
  CHECK(obj_equal(psi.cod(), Q));
  CHECK(psi(1, 0) == 1i);
  CHECK_THROWS_AS(parse_state<C>("[1,2"), ParseError);
  CHECK_THROWS_AS(parse_state<C>("[]"), ParseError);
}

TEST_CASE("report round trip") {
  SuiteOptions o;
  o.suite = "prep-state";
  o.trials = 20;
  o.seed = 9;
  auto r = run_suite(o);
  REQUIRE_FALSE(r.results.empty());
  const std::string text = emit_report(r, ReportFormat::Json);
  CHECK(parse_report(text) == r);
  CHECK(emit_report(parse_report(text), ReportFormat::Json) == text);
  CHECK(emit_report(run_suite(o), ReportFormat::Json) == text);
  CHECK_THROWS_AS(parse_report("{"), ParseError);
  CHECK_THROWS_AS(parse_report(R"({"schema": 2})"), ParseError);
}

TEST_CASE("status accounting") {
  VerificationReport r;
  r.add({"a", "a holds", Status::Pass, "", {}});
  r.add({"b", "b is violated", Status::ExpectedFail, "", {}});
  CHECK(r.ok());
  r.add({"c", "c holds", Status::Fail, "", {}});
  CHECK_FALSE(r.ok());
  CHECK(r.exit_code() == 1);
  CHECK(expect_violation({"d", "", Status::Pass, "", {}}).status == Status::Fail);
  CHECK(expect_violation({"d", "", Status::Fail, "", {}}).status == Status::ExpectedFail);
  CHECK(status_from_string("expected-fail") == Status::ExpectedFail);
  CHECK_THROWS_AS(status_from_string("maybe"), ParseError);
}

TEST_CASE("suite selection") {
  SuiteOptions o;
  o.suite = "bogus";
  CHECK_THROWS_AS(run_suite(o), UnknownSuite);
  o.suite = "sccc";
  o.model = "bogus";
  CHECK_THROWS_AS(run_suite(o), UnknownModel);
  o.model = "wproj:fdhilb";
  o.suite = "ortho";
  CHECK_THROWS_AS(run_suite(o), UnknownModel);
}

TEST_CASE("every failure carries a witness") {
  SuiteOptions o;
  o.trials = 30;
  for (const auto& s : suite_names()) {
    if (s == "teleport") continue;
    o.suite = s;
    for (const char* m : {"fdhilb", "rel", "weights"}) {
      o.model = m;
      auto r = run_suite(o);
      for (const auto& c : r.results)
        if (c.status != Status::Pass) {
          INFO(s << "/" << m << " " << c.check);
          CHECK_FALSE(c.witness.empty());
        }
    }
  }
}
