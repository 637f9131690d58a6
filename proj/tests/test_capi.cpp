// SPDX-License-Identifier: Apache-2.0
#include <cstring>
#include <string>

#include "doctest.h"
#include "nacll/nacll.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  nacll_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("prove through the C interface") {
  nacll_verdict v{};
  nacll_proof* p = nullptr;
  char* report = nullptr;
  REQUIRE(nacll_prove("|- ((b^ * a), (a^ # b))", nullptr, NACLL_SYS_CLASSICAL, 0, nullptr, &v, &p, &report) ==
          NACLL_OK);
  CHECK(v == NACLL_PROVED);
  CHECK(take(report).find("proved") == 0);
  REQUIRE(p);
  CHECK(nacll_check(p, nullptr, NACLL_SYS_CLASSICAL, 0, 0, nullptr) == NACLL_OK);
  char* concl = nullptr;
  REQUIRE(nacll_proof_conclusion(p, &concl) == NACLL_OK);
  CHECK(take(concl) == "|- ((b^ * a), (a^ # b))");
  char* text = nullptr;
  REQUIRE(nacll_proof_to_sexp(p, &text) == NACLL_OK);
  nacll_proof* again = nullptr;
  REQUIRE(nacll_proof_parse(text, &again) == NACLL_OK);
  nacll_string_free(text);
  CHECK(nacll_proof_render(again, "latex", &text) == NACLL_OK);
  CHECK(take(text).find("prooftree") != std::string::npos);
  CHECK(nacll_proof_render(again, "html", &text) == NACLL_E_ARGUMENT);
  nacll_proof_free(again);
  nacll_proof_free(p);

  REQUIRE(nacll_prove("|- (a, a)", nullptr, NACLL_SYS_CLASSICAL, 0, nullptr, &v, &p, nullptr) == NACLL_OK);
  CHECK(v == NACLL_EXHAUSTED);
  CHECK(p == nullptr);
  nacll_budget b = nacll_default_budget();
  CHECK(b.max_depth == 14);
  b.max_depth = 1;
  REQUIRE(nacll_prove("|- ((b^ * a), (a^ # b))", nullptr, NACLL_SYS_CLASSICAL, 0, &b, &v, nullptr, nullptr) ==
          NACLL_OK);
  CHECK(v == NACLL_BUDGET_EXCEEDED);
}

TEST_CASE("errors carry codes and messages") {
  nacll_verdict v{};
  CHECK(nacll_prove("|- (a * $)", nullptr, NACLL_SYS_CLASSICAL, 0, nullptr, &v, nullptr, nullptr) == NACLL_E_PARSE);
  CHECK(std::strstr(nacll_last_error(), "parse error at") != nullptr);
  CHECK(nacll_prove("|- (a -> b)", nullptr, NACLL_SYS_CLASSICAL, 0, nullptr, &v, nullptr, nullptr) ==
        NACLL_E_ILL_FORMED);
  CHECK(nacll_prove(nullptr, nullptr, NACLL_SYS_CLASSICAL, 0, nullptr, &v, nullptr, nullptr) == NACLL_E_ARGUMENT);
  nacll_signature* sig = nullptr;
  CHECK(nacll_signature_parse("label a : Q\n", &sig) != NACLL_OK);
  CHECK(std::string(nacll_status_name(NACLL_E_CHECK)) == "proof does not check");

  nacll_proof* p = nullptr;
  REQUIRE(nacll_proof_parse("(rule Init :seq \"|- (a, b^)\")", &p) == NACLL_OK);
  char* why = nullptr;
  CHECK(nacll_check(p, nullptr, NACLL_SYS_CLASSICAL, 0, 1, &why) == NACLL_E_CHECK);
  CHECK_FALSE(take(why).empty());
  nacll_proof* lowered = nullptr;
  CHECK(nacll_lower(p, nullptr, NACLL_SYS_CLASSICAL, nullptr, &lowered, nullptr) == NACLL_E_ARGUMENT);
  nacll_proof_free(p);
}

TEST_CASE("translation, canonical forms, classification") {
  char* out = nullptr;
  REQUIRE(nacll_translate("(a -> b) |- (a -> b)", &out) == NACLL_OK);
  CHECK(take(out) == "|- ((b^ * a), (a^ # b))");
  REQUIRE(nacll_canonicalize("|- (c, (a, b))", &out) == NACLL_OK);
  std::string c1 = take(out);
  REQUIRE(nacll_canonicalize("|- ((b, c), a)", &out) == NACLL_OK);
  CHECK(take(out) == c1);
  REQUIRE(nacll_canonicalize("((b, c), a)", &out) == NACLL_OK);
  CHECK("|- " + take(out) == c1);
  nacll_polarity pol{};
  REQUIRE(nacll_classify("(a^ # b)", &pol) == NACLL_OK);
  CHECK(pol == NACLL_POSITIVE);
  REQUIRE(nacll_classify("(a # b)", &pol) == NACLL_OK);
  CHECK(pol == NACLL_NEITHER);
}

TEST_CASE("lift and lower round trip") {
  nacll_proof* p = nullptr;
  REQUIRE(nacll_proof_parse("(rule ArrowR :seq \"(a -> b) |- (a -> b)\" :premises ((rule ArrowL :seq \"(a, (a -> b)) "
                            "|- b\" :at (\"R\") :premises ((rule Id :seq \"a |- a\") (rule Id :seq \"b |- b\")))))",
                            &p) == NACLL_OK);
  REQUIRE(nacll_check(p, nullptr, NACLL_SYS_INT, 0, 1, nullptr) == NACLL_OK);
  nacll_proof* c = nullptr;
  REQUIRE(nacll_lift(p, nullptr, &c) == NACLL_OK);
  CHECK(nacll_check(c, nullptr, NACLL_SYS_CLASSICAL, 0, 0, nullptr) == NACLL_OK);
  nacll_proof* back = nullptr;
  int fallbacks = -1;
  REQUIRE(nacll_lower(c, nullptr, NACLL_SYS_INT, nullptr, &back, &fallbacks) == NACLL_OK);
  CHECK(fallbacks == 0);
  char* concl = nullptr;
  REQUIRE(nacll_proof_conclusion(back, &concl) == NACLL_OK);
  CHECK(take(concl) == "(a -> b) |- (a -> b)");
  nacll_proof_free(back);
  nacll_proof_free(c);
  nacll_proof_free(p);
}

TEST_CASE("corpus through the C interface") {
  int passed = 0, total = 0;
  char* report = nullptr;
  REQUIRE(nacll_corpus_run(NACLL_CORPUS_DIR "/cases", &passed, &total, &report) == NACLL_OK);
  CHECK(total > 0);
  CHECK(passed == total);
  nacll_string_free(report);
  CHECK(nacll_corpus_run("/nonexistent-dir", &passed, &total, nullptr) == NACLL_E_IO);
}
