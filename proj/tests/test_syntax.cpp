// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"
#include "gen.hpp"
#include "nacll/syntax.hpp"

using namespace nacll;

namespace {
Formula F(const char* s) { return parse_formula(s); }
Structure S(const char* s) { return parse_structure(s); }
}  // namespace

TEST_CASE("negate pushes negation to atoms") {
  CHECK(negate(F("(bot & (a * ![i]b))")).text() == "(1 + (?[i]b^ # a^))");
  CHECK(negate(F("a")) == F("a^"));
  CHECK(negate(F("a^")) == F("a"));
  CHECK(negate(F("top")) == F("0"));
  CHECK(negate(F("1")) == F("bot"));
  CHECK(negate(F("((a * b) # c)")).text() == "(c^ * (b^ # a^))");
  CHECK_THROWS_AS(negate(F("(a -> b)")), Error);
}

TEST_CASE("negate is an involution") {
  testsupport::Gen g(7);
  for (int i = 0; i < 500; ++i) {
    Formula f = g.classical(5);
    CHECK(negate(negate(f)) == f);
    CHECK(negate(f).connectives() == f.connectives());
  }
}

TEST_CASE("normalize wipes out empty structures") {
  auto leaf = [](const char* a) { return RawStructure::leaf(F(a)); };
  CHECK(normalize(RawStructure::pair(RawStructure::empty(), leaf("a"))).text() == "a");
  CHECK(normalize(RawStructure::pair(RawStructure::empty(), RawStructure::empty())).is_empty());
  CHECK(normalize(RawStructure::pair(RawStructure::pair(leaf("a"), RawStructure::empty()), leaf("b"))).text() ==
        "(a, b)");
  CHECK(normalize(parse_raw_structure("((), (a, (() , b)))")).text() == "(a, b)");
  CHECK(S("((), a)").text() == "a");
}

TEST_CASE("normalize is idempotent and keeps leaf order") {
  testsupport::Gen g(11);
  for (int i = 0; i < 200; ++i) {
    Structure s = g.structure(1 + g.pick(6), [&] { return g.classical(2); });
    CHECK(parse_structure(s.text()) == s);
    std::string before, after;
    for (auto& [p, f] : leaves(s)) before += f.text() + ";";
    for (auto& [p, f] : leaves(parse_structure(s.text()))) after += f.text() + ";";
    CHECK(before == after);
  }
}

TEST_CASE("parse and print") {
  Formula f = F("(a * (b * ![k]c))");
  REQUIRE(f.kind() == Connective::Tensor);
  CHECK(f.rhs().rhs().kind() == Connective::Bang);
  CHECK(f.rhs().rhs().label() == "k");
  Sequent c = parse_sequent("|- (a^, a)");
  CHECK_FALSE(c.is_intuitionistic());
  CHECK(c.context.left().formula().kind() == Connective::NegAtom);
  Sequent i = parse_sequent("((a * b) * ![a1]c) |- (a * (b * ![a1]c))");
  CHECK(i.is_intuitionistic());
  CHECK(i.context.text() == "((a * b) * ![a1]c)");
  CHECK(parse_sequent("() |- (a -> a)").text() == "() |- (a -> a)");
  CHECK(parse_sequent("|-   ( a ,b )").text() == "|- (a, b)");
  CHECK(parse_formula("(b <- a)").kind() == Connective::ImplL);
  CHECK(parse_formula("(b <- a)").lhs() == F("b"));
}

TEST_CASE("round trip on generated formulas") {
  testsupport::Gen g(3);
  for (int i = 0; i < 300; ++i) {
    Formula c = g.classical(5);
    CHECK(parse_formula(c.text()) == c);
    Formula n = g.intuitionistic(5, true);
    CHECK(parse_formula(n.text()) == n);
    Structure s = g.structure(1 + g.pick(5), [&] { return g.intuitionistic(2); });
    Sequent q = Sequent::intuitionistic(s, n);
    CHECK(parse_sequent(q.text()) == q);
  }
}

TEST_CASE("syntax errors carry a position") {
  CHECK_THROWS_AS(parse_formula("a * b"), ParseError);
  CHECK_THROWS_AS(parse_formula("(a * b * c)"), ParseError);
  CHECK_THROWS_AS(parse_formula("(a * )"), ParseError);
  CHECK_THROWS_AS(parse_formula("A"), ParseError);
  CHECK_THROWS_AS(parse_sequent("|- ()"), Error);
  try {
    parse_formula("(a * $)");
    FAIL("no throw");
  } catch (const ParseError& e) {
    CHECK(e.position() == 5);
  }
}

TEST_CASE("well-formedness per system") {
  CHECK(is_classical(F("(a # ?[i]b^)")));
  CHECK_FALSE(is_classical(F("(a -> b)")));
  CHECK(is_intuitionistic(F("((a -> b) <- ![i]c)"), false));
  CHECK_FALSE(is_intuitionistic(F("(a # b)"), false));
  CHECK_FALSE(is_intuitionistic(F("0"), false));
  CHECK(is_intuitionistic(F("0"), true));
}

TEST_CASE("paths, at and replace") {
  Structure s = S("(a, (b, c))");
  CHECK(at(s, Path::parse("RL")).text() == "b");
  CHECK(replace(s, Path::parse("RL"), Structure::empty()).text() == "(a, c)");
  CHECK(replace(S("(a, b)"), Path::parse("L"), S("(x, y)")).text() == "((x, y), b)");
  CHECK_FALSE(valid_path(s, Path::parse("LL")));
  CHECK_THROWS_AS(at(s, Path::parse("LL")), Error);
  CHECK(replace_many(s, {{Path::parse("L"), Structure::empty()}, {Path::parse("RR"), Structure::empty()}}).text() ==
        "b");
  CHECK(node_paths(s).size() == 5);
  CHECK(leaves(s).size() == 3);
}
