// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"
#include "nacll/corpus.hpp"

using namespace nacll;

TEST_CASE("case file parsing") {
  auto cs = parse_cases("# c\ncase one\nsource here\nsequent |- (a^, a)\nexpect Proved\ndepth 3\n\ncase two\n"
                        "system int\nsequent a |- a\ncontractions 0\nexpect Proved\n",
                        "x.case");
  REQUIRE(cs.size() == 2);
  CHECK(cs[0].budget.max_depth == 3);
  CHECK(cs[1].system == "int");
  CHECK(cs[1].budget.max_contractions == 0);
  CHECK_THROWS_AS(parse_cases("sequent a |- a\n", "x"), Error);
  CHECK_THROWS_AS(parse_cases("case a\nexpect Maybe\n", "x"), Error);
  CHECK_THROWS_AS(parse_cases("case a\nsequent a |- a\n", "x"), Error);
  CHECK_THROWS_AS(parse_cases("case a\nexpect CheckOk\n", "x"), Error);
  CHECK_THROWS_AS(parse_cases("case a\ncolour red\n", "x"), Error);
  CHECK_THROWS_AS(parse_cases("case a\ndepth -1\n", "x"), Error);
}

TEST_CASE("a failing expectation is reported") {
  auto cs = parse_cases("case wrong\nsequent |- (a, a)\nexpect Proved\n", "x.case");
  auto r = run_corpus(cs);
  REQUIRE(r.size() == 1);
  CHECK_FALSE(r[0].pass);
  CHECK(r[0].actual == "Exhausted");
  CHECK(format_report(r).find("0/1 cases passed") != std::string::npos);
}

TEST_CASE("the shipped corpus passes") {
  auto cases = load_cases(std::string(NACLL_CORPUS_DIR) + "/cases");
  CHECK(cases.size() >= 15);
  auto results = run_corpus(cases);
  for (const auto& r : results) {
    CAPTURE(r.name);
    CAPTURE(r.detail);
    CHECK(r.pass);
  }
}
