// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"
#include "nacll/classical.hpp"
#include "support.hpp"

using namespace nacll;
using testsupport::golden;
using testsupport::sig_file;

namespace {

StepResult step(Rule r, const char* concl, std::vector<const char*> prem, const Signature& sig,
                Mode mode = Mode::Strict, std::vector<const char*> at = {}, std::optional<std::string> label = {}) {
  std::vector<Sequent> ps;
  for (auto* p : prem) ps.push_back(parse_sequent(p));
  std::vector<Path> paths;
  for (auto* a : at) paths.push_back(Path::parse(a));
  return check_step(r, parse_sequent(concl), paths, label, ps, sig, mode);
}

void require_ok(const Proof& p, const Signature& sig, Mode mode) {
  auto v = check_proof(p, sig, mode);
  INFO((v ? v->where() + ": " + v->message : std::string()));
  CHECK_FALSE(v.has_value());
}

}  // namespace

TEST_CASE("golden derivations check in strict mode and survive erasure") {
  const std::pair<const char*, const char*> cases[] = {
      {"exchange.sexp", "empty.sig"},
      {"reassoc.sexp", "empty.sig"},
      {"assoc-classical.sexp", "assoc.sig"},
      {"zero-classical.sexp", "zero.sig"},
  };
  for (auto [file, sigf] : cases) {
    INFO(std::string(file));
    Proof p = golden(file);
    Signature sig = sig_file(sigf);
    require_ok(p, sig, Mode::Strict);
    Proof erased = erase_structural(p);
    require_ok(erased, sig, Mode::Modulo);
    Proof back = expand_to_strict(erased, sig);
    require_ok(back, sig, Mode::Strict);
    CHECK(back.conclusion == erased.conclusion);
    CHECK(parse_proof(to_sexp(p)).size() == p.size());
  }
}

TEST_CASE("erasing the exchange step breaks the strict link") {
  Proof p = golden("exchange.sexp");
  Proof erased = erase_structural(p);
  auto v = check_proof(erased, Signature(), Mode::Strict);
  REQUIRE(v.has_value());
  CHECK(v->message.find("Par") != std::string::npos);
  CHECK(v->where() == "root");
}

TEST_CASE("structural rules are rejected in modulo mode") {
  auto r = step(Rule::E, "|- (a, a^)", {"|- (a^, a)"}, Signature(), Mode::Modulo);
  CHECK_FALSE(r.ok());
  CHECK(step(Rule::E, "|- (a, a^)", {"|- (a^, a)"}, Signature()).ok());
}

TEST_CASE("Init") {
  Signature s;
  CHECK(step(Rule::Init, "|- (a, a^)", {}, s).ok());
  CHECK(step(Rule::Init, "|- (a^, a)", {}, s).ok());
  CHECK_FALSE(step(Rule::Init, "|- (a, b^)", {}, s).ok());
  CHECK_FALSE(step(Rule::Init, "|- ((a * b), (b^ # a^))", {}, s).ok());
  CHECK_FALSE(step(Rule::Init, "|- (a, (a^, a))", {}, s).ok());
}

TEST_CASE("Tensor premise order is fixed") {
  Signature s;
  CHECK(step(Rule::Tensor, "|- ((x, y), (f * g))", {"|- (x, g)", "|- (y, f)"}, s).ok());
  auto swapped = step(Rule::Tensor, "|- ((x, y), (f * g))", {"|- (y, f)", "|- (x, g)"}, s);
  CHECK_FALSE(swapped.ok());
  CHECK(swapped.error.find("designated conclusion") != std::string::npos);
  // Empty side contexts.
  CHECK(step(Rule::Tensor, "|- (x, (f * g))", {"|- (x, g)", "|- f"}, s).ok());
  CHECK(step(Rule::Tensor, "|- (x, (f * g))", {"|- g", "|- (x, f)"}, s).ok());
  // Modulo: the tensor can sit anywhere.
  CHECK(step(Rule::Tensor, "|- ((f * g), (x, y))", {"|- (x, g)", "|- (y, f)"}, s, Mode::Modulo).ok());
  CHECK_FALSE(step(Rule::Tensor, "|- ((f * g), (x, y))", {"|- (x, g)", "|- (y, f)"}, s).ok());
}

TEST_CASE("deep unary rules") {
  Signature s;
  CHECK(step(Rule::Par, "|- (x, ((f # g), y))", {"|- (x, ((f, g), y))"}, s, Mode::Strict, {"RL"}).ok());
  CHECK(step(Rule::PlusL, "|- (x, (f + g))", {"|- (x, f)"}, s).ok());
  CHECK(step(Rule::PlusR, "|- (x, (f + g))", {"|- (x, g)"}, s).ok());
  CHECK_FALSE(step(Rule::PlusR, "|- (x, (f + g))", {"|- (x, f)"}, s).ok());
  CHECK(step(Rule::With, "|- (x, (f & g))", {"|- (x, f)", "|- (x, g)"}, s).ok());
  CHECK(step(Rule::BotIntro, "|- ((x, bot), y)", {"|- (x, y)"}, s).ok());
  CHECK_FALSE(step(Rule::BotIntro, "|- bot", {"|- bot"}, s).ok());
  CHECK(step(Rule::OneAx, "|- 1", {}, s).ok());
  CHECK_FALSE(step(Rule::OneAx, "|- (1, x)", {}, s).ok());
  CHECK(step(Rule::TopAx, "|- (x, (y, top))", {}, s).ok());
  CHECK(step(Rule::Der, "|- (x, ?[i]f)", {"|- (x, f)"}, s).ok());
}

TEST_CASE("arity is checked") {
  auto r = step(Rule::Init, "|- (a, a^)", {"|- (a, a^)"}, Signature());
  CHECK_FALSE(r.ok());
  CHECK(r.error.find("premise") != std::string::npos);
}

TEST_CASE("Prom with upset restriction") {
  Signature s = load_signature("label i : \nlabel j : \nlabel k : W\norder i <= j\n");
  CHECK(step(Rule::Prom, "|- ((?[i]a, (?[j]b, ?[k]c)), ![i]f)", {"|- ((?[i]a, ?[j]b), f)"}, s).ok());
  Signature nw = load_signature("label i : \nlabel j : \nlabel k : \norder i <= j\n");
  auto r = step(Rule::Prom, "|- ((?[i]a, (?[j]b, ?[k]c)), ![i]f)", {"|- ((?[i]a, ?[j]b), f)"}, nw);
  CHECK_FALSE(r.ok());
  CHECK(r.error.find("undefined") != std::string::npos);
  CHECK(step(Rule::Prom, "|- ![i]f", {"|- f"}, s).ok());
  CHECK_FALSE(step(Rule::Prom, "|- (a, ![i]f)", {"|- (a, f)"}, s).ok());
}

TEST_CASE("QE licensing") {
  Signature none = load_signature("label e : C\n");
  auto r = step(Rule::QE, "|- ((a, b), ?[e]g)", {"|- ((b, a), ?[e]g)"}, none);
  CHECK_FALSE(r.ok());
  CHECK(r.error.find("unlicensed") != std::string::npos);
  CHECK(r.error.find("e lacks E") != std::string::npos);
  Signature yes = load_signature("label e : E\n");
  CHECK(step(Rule::QE, "|- ((a, b), ?[e]g)", {"|- ((b, a), ?[e]g)"}, yes).ok());
}

TEST_CASE("QA1 and QA2 shapes") {
  Signature s = load_signature("label u : A1\nlabel v : A2\n");
  CHECK(step(Rule::QA1, "|- (((a, b), c), ?[u]g)", {"|- ((a, (b, c)), ?[u]g)"}, s).ok());
  CHECK_FALSE(step(Rule::QA1, "|- (((a, b), c), ?[v]g)", {"|- ((a, (b, c)), ?[v]g)"}, s).ok());
  CHECK(step(Rule::QA2, "|- ((a, (b, c)), ?[v]g)", {"|- (((a, b), c), ?[v]g)"}, s).ok());
  // Modulo: the ?-structure can be anywhere.
  CHECK(step(Rule::QA2, "|- (?[v]g, (a, (b, c)))", {"|- (((a, b), c), ?[v]g)"}, s, Mode::Modulo).ok());
}

TEST_CASE("QW and QC") {
  Signature s = load_signature("label w : W\nlabel c : C\n");
  CHECK(step(Rule::QW, "|- (a, (?[w]f, b))", {"|- (a, b)"}, s).ok());
  CHECK_FALSE(step(Rule::QW, "|- (a, (?[c]f, b))", {"|- (a, b)"}, s).ok());
  CHECK(step(Rule::QC, "|- (a, ?[c]f)", {"|- ((?[c]f, a), ?[c]f)"}, s, Mode::Strict, {"LL", "R"}).ok());
  CHECK(step(Rule::QC, "|- (?[c]f, a)", {"|- ((?[c]f, a), ?[c]f)"}, s, Mode::Strict, {"LL", "R"}).ok());
  CHECK_FALSE(step(Rule::QC, "|- (a, ?[w]f)", {"|- ((?[w]f, a), ?[w]f)"}, s, Mode::Strict, {"LL", "R"}).ok());
  CHECK_FALSE(step(Rule::QC, "|- (a, ?[c]f)", {"|- ((?[c]f, a), ?[c]f)"}, s, Mode::Strict, {"LL"}).ok());
}

TEST_CASE("Cut") {
  Signature s;
  CHECK(step(Rule::Cut, "|- (x, y)", {"|- (x, (a * b))", "|- ((b^ # a^), y)"}, s).ok());
  CHECK(step(Rule::Cut, "|- (y, x)", {"|- ((a * b), x)", "|- (y, (b^ # a^))"}, s, Mode::Modulo).ok());
  CHECK_FALSE(step(Rule::Cut, "|- (x, y)", {"|- (x, (a * b))", "|- ((a^ # b^), y)"}, s).ok());
}
