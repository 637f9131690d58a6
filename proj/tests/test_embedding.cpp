// SPDX-License-Identifier: Apache-2.0
#include <set>

#include "doctest.h"
#include "gen.hpp"
#include "nacll/classical.hpp"
#include "nacll/embedding.hpp"
#include "nacll/equivalence.hpp"
#include "support.hpp"

using namespace nacll;

namespace {

// Formulas with at most n connectives, by exhaustive construction.
std::vector<std::vector<Formula>> grow(const std::vector<Formula>& base, int n,
                                       const std::vector<Connective>& binary, bool bang, bool quest) {
  std::vector<std::vector<Formula>> by(static_cast<std::size_t>(n + 1));
  by[0] = base;
  for (int k = 1; k <= n; ++k) {
    auto& out = by[static_cast<std::size_t>(k)];
    for (const Formula& f : by[static_cast<std::size_t>(k - 1)]) {
      if (bang) out.push_back(Formula::bang("i", f));
      if (quest) out.push_back(Formula::quest("i", f));
    }
    for (int i = 0; i <= k - 1; ++i)
      for (const Formula& a : by[static_cast<std::size_t>(i)])
        for (const Formula& b : by[static_cast<std::size_t>(k - 1 - i)])
          for (Connective c : binary) out.push_back(Formula::binary(c, a, b));
  }
  return by;
}

std::vector<std::vector<Formula>> intuitionistic_upto(int n) {
  return grow({Formula::atom("a"), Formula::one(), Formula::top()}, n,
              {Connective::Tensor, Connective::ImplR, Connective::ImplL, Connective::Plus, Connective::With}, true,
              false);
}

std::vector<std::vector<Formula>> classical_upto(int n) {
  return grow({Formula::atom("a"), Formula::neg_atom("a"), Formula::one(), Formula::bot(), Formula::top(),
               Formula::zero()},
              n, {Connective::Tensor, Connective::Par, Connective::Plus, Connective::With}, true, true);
}

Sequent seq(const char* s) { return parse_sequent(s); }

}  // namespace

TEST_CASE("hat and translate_sequent") {
  CHECK(hat(parse_formula("(a -> b)")).text() == "(a^ # b)");
  CHECK(hat(parse_formula("(b <- a)")).text() == "(b # a^)");
  CHECK(hat(parse_formula("p")).text() == "p");
  CHECK(negate(hat(parse_formula("((a * b) * ![a1]c)"))).text() == "(?[a1]c^ # (b^ # a^))");
  CHECK(translate_sequent(seq("(a -> b) |- (a -> b)")).text() == "|- ((b^ * a), (a^ # b))");
  CHECK(translate_sequent(seq("b |- (a -> (a * b))")).text() == "|- (b^, (a^ # (a * b)))");
  CHECK(translate_sequent(seq("(a, b) |- c")).text() == "|- ((b^, a^), c)");
  CHECK(translate_sequent(seq("() |- c")).text() == "|- c");
  CHECK_THROWS_AS(hat(parse_formula("(a # b)")), Error);
}

TEST_CASE("classify examples") {
  CHECK(classify(parse_formula("p")) == Polarity::Positive);
  CHECK(h_count(parse_formula("p")) == 0);
  CHECK(classify(parse_formula("p^")) == Polarity::Negative);
  CHECK(h_count(parse_formula("p^")) == 1);
  CHECK(classify(parse_formula("(a # a)")) == Polarity::Neither);
  CHECK_FALSE(h_count(parse_formula("(a # a)")));
  CHECK(classify(parse_formula("?[i]a")) == Polarity::Neither);
}

TEST_CASE("recognizers agree with brute-force images of hat") {
  const int n = 3;
  std::set<std::string> pos, neg;
  for (const auto& layer : intuitionistic_upto(n))
    for (const Formula& f : layer) {
      Formula h = hat(f);
      pos.insert(h.text());
      neg.insert(negate(h).text());
      // Images classify and invert.
      CHECK(classify(h) == Polarity::Positive);
      CHECK(classify(negate(h)) == Polarity::Negative);
      CHECK(unhat(h) == f);
      CHECK(unhat_negative(negate(h)) == f);
    }
  for (const auto& p : pos) CHECK(neg.count(p) == 0);  // hat images never negated images
  std::size_t checked = 0;
  for (const auto& layer : classical_upto(n))
    for (const Formula& f : layer) {
      Polarity c = classify(f);
      bool is_pos = pos.count(f.text()) != 0;
      // 0 is the negation of top's translation; under the zero extension it
      // would also be its own translation, which is why it is left Negative.
      bool is_neg = neg.count(f.text()) != 0;
      if ((c == Polarity::Positive) != is_pos || (c == Polarity::Negative) != is_neg) {
        FAIL_CHECK(f.text());
        break;
      }
      ++checked;
    }
  CHECK(checked > 100000);
}

TEST_CASE("polarizable") {
  auto p = polarizable(seq("|- ((b^ * a), (a^ # b))"));
  REQUIRE(p);
  CHECK(p->str() == "R");
  CHECK_FALSE(polarizable(seq("|- (p, q)")));
  CHECK_FALSE(polarizable(seq("|- (p^, q^)")));
  CHECK_THROWS_AS(polarizable(seq("|- ((a # a), b)")), Error);
}

TEST_CASE("recover_sequent inverts translate_sequent up to equivalence") {
  testsupport::Gen g(11);
  for (int n = 0; n < 400; ++n) {
    int k = g.pick(4);
    Structure ant = k == 0 ? Structure() : g.structure(k, [&] { return g.intuitionistic(2); });
    Sequent s = Sequent::intuitionistic(ant, g.intuitionistic(2));
    Sequent t = translate_sequent(s);
    CHECK(recover_sequent(t) == s);
    for (const Rotation& r : rotations(t.context)) CHECK(recover_sequent(Sequent::classical(r.whole())) == s);
  }
  CHECK_THROWS_AS(recover_sequent(seq("|- (p, q)")), Error);
}

TEST_CASE("lift of golden intuitionistic proofs") {
  Signature sig;
  for (const char* name : {"impl-identity.sexp", "unit-pair.sexp"}) {
    Proof p = testsupport::golden(name);
    REQUIRE_FALSE(check_proof_i(p, sig, {}));
    Proof c = lift_proof(p, sig);
    CHECK(c.conclusion == translate_sequent(p.conclusion));
    CHECK_FALSE(check_proof(c, sig, Mode::Modulo));
  }
  Proof id = lift_proof(parse_proof("(rule Id :seq \"a |- a\")"), sig);
  CHECK(id.rule == Rule::Init);
  CHECK(id.conclusion.text() == "|- (a^, a)");
  Proof ex = lift_proof(testsupport::golden("impl-identity.sexp"), sig);
  CHECK(ex.conclusion.text() == "|- ((b^ * a), (a^ # b))");
  CHECK(ex.rule == Rule::Par);
  CHECK(ex.premises[0].rule == Rule::Tensor);
}

TEST_CASE("every generated rule instance lifts") {
  Signature sig = load_signature("label i : C, W, E, A1, A2\nlabel j : W\norder j <= i\n");
  testsupport::Gen g(5);
  std::size_t lifted = 0;
  std::set<Rule> seen;
  for (int n = 0; n < 400; ++n) {
    int k = g.pick(4);
    Structure ant = k == 0 ? Structure() : g.structure(k, [&] { return g.intuitionistic(2, true); });
    Sequent s = Sequent::intuitionistic(ant, g.intuitionistic(2, true));
    for (ISystem sys : {ISystem::ALL, ISystem::ALL_PLUS}) {
      IConfig cfg{sys, true};
      auto insts = all_instances_i(s, sig, cfg);
      for (auto& i : contraction_instances(s, sig)) insts.push_back(i);
      for (const auto& i : insts) {
        CAPTURE(s.text());
        CAPTURE(rule_name(i.rule));
        CHECK_NOTHROW(lift_step(i.rule, s, i.at, i.label, i.premises, sig));
        seen.insert(i.rule);
        ++lifted;
      }
    }
  }
  CHECK(lifted > 1000);
  CHECK(seen.size() >= 25);
}

TEST_CASE("lift of A1M is a subexponential associativity step") {
  Signature sig = testsupport::sig_file("assoc.sig");
  Sequent s = seq("(x, (![a1]y, z)) |- c");
  auto insts = instances_i(Rule::A1M, s, {}, std::nullopt, sig, IConfig{ISystem::ALL_PLUS, false});
  REQUIRE(insts.size() == 1);
  Rule r = lift_step(Rule::A1M, s, insts[0].at, insts[0].label, insts[0].premises, sig).rule;
  CHECK((r == Rule::QA1 || r == Rule::QA2));
}

TEST_CASE("lowering") {
  Signature empty;
  LowerOptions all;
  SUBCASE("round trip through lift") {
    for (const char* name : {"impl-identity.sexp", "unit-pair.sexp"}) {
      Proof p = testsupport::golden(name);
      Proof back = lower_proof(lift_proof(p, empty), empty, all);
      CHECK(back.conclusion == p.conclusion);
      CHECK(fallback_count(back) == 0);
    }
  }
  SUBCASE("golden classical proofs") {
    Proof ex = erase_structural(testsupport::golden("exchange.sexp"));
    Proof l = lower_proof(ex, empty, all);
    CHECK(l.conclusion.text() == "(a -> b) |- (a -> b)");
    CHECK(fallback_count(l) == 0);
    Proof re = lower_proof(testsupport::golden("reassoc.sexp"), empty, all);
    CHECK(re.conclusion.text() == "b |- (a -> (a * b))");
  }
  SUBCASE("associativity needs int-plus") {
    Signature sig = testsupport::sig_file("assoc.sig");
    Proof p = testsupport::golden("assoc-classical.sexp");
    CHECK_THROWS_AS(lower_proof(p, sig, all), Error);
    LowerOptions plus;
    plus.target = IConfig{ISystem::ALL_PLUS, false};
    Proof l = lower_proof(p, sig, plus);
    CHECK(l.conclusion.text() == "() |- (((a * b) * ![a1]c) -> (a * (b * ![a1]c)))");
    REQUIRE(l.rule == Rule::ArrowR);
    CHECK(l.premises[0].conclusion.text() == "((a * b) * ![a1]c) |- (a * (b * ![a1]c))");
    CHECK_FALSE(check_proof_i(l, sig, plus.target));
    CHECK(fallback_count(l) == 0);
  }
  SUBCASE("not a translation") {
    Proof bad = parse_proof("(rule Init :seq \"|- ((a # a), (a # a))\")");
    try {
      lower_proof(bad, empty, all);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotTranslation);
    }
  }
}

TEST_CASE("search proofs lift and lower") {
  Signature sig = load_signature("label i : C, W, E\nlabel j : W\n");
  testsupport::Gen g(23);
  int proved = 0;
  for (int n = 0; n < 200; ++n) {
    int k = 1 + g.pick(2);
    Structure ant = g.structure(k, [&] { return g.intuitionistic(1); });
    Sequent s = Sequent::intuitionistic(ant, g.intuitionistic(2));
    Budget b;
    b.max_depth = 8;
    b.max_contractions = 1;
    auto o = prove_intuitionistic(s, sig, {}, b);
    if (!o.proof) continue;
    ++proved;
    CAPTURE(s.text());
    Proof c = lift_proof(*o.proof, sig);
    CHECK_FALSE(check_proof(c, sig, Mode::Modulo));
    Proof back = lower_proof(c, sig, LowerOptions{});
    CHECK(back.conclusion == s);
    CHECK(fallback_count(back) == 0);
  }
  CHECK(proved > 20);
}
