// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"
#include "nacll/signature.hpp"

using namespace nacll;

namespace {
Structure S(const char* s) { return parse_structure(s); }
}  // namespace

TEST_CASE("load_signature") {
  Signature s = load_signature("label c : C\nlabel w : W\n");
  CHECK(s.licenses("c", Axiom::C));
  CHECK_FALSE(s.licenses("c", Axiom::W));
  CHECK(s.leq("c", "c"));
  CHECK_FALSE(s.leq("c", "w"));
  Signature a = load_signature("# comment\nlabel a1 : A1\nlabel a2 : A2  # trailing\n");
  CHECK(a.axioms("a1") == AxiomSet{Axiom::A1});
  CHECK(a.axioms("a2") == AxiomSet{Axiom::A2});
  CHECK(a.axioms("missing").empty());
}

TEST_CASE("upward closure") {
  CHECK_NOTHROW(load_signature("label i :\nlabel j : W\norder i <= j\n"));
  try {
    load_signature("label i :\nlabel j : W\norder j <= i\n");
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Signature);
    CHECK(std::string(e.what()).find("W") != std::string::npos);
  }
  // Transitive pairs are checked too.
  CHECK_THROWS(load_signature("label i : C\nlabel j : C\nlabel k :\norder i <= j\norder j <= k\n"));
  Signature t = load_signature("label i :\nlabel j :\nlabel k :\norder i <= j\norder j <= k\n");
  CHECK(t.leq("i", "k"));
  CHECK_FALSE(t.leq("k", "i"));
}

TEST_CASE("signature syntax errors") {
  CHECK_THROWS(load_signature("label i : Q\n"));
  CHECK_THROWS(load_signature("order i <= j\n"));
  CHECK_THROWS(load_signature("lable i : C\n"));
}

TEST_CASE("upset restriction") {
  Signature s = load_signature("label i :\nlabel j :\nlabel k : W\norder i <= j\n");
  auto r = upset_restrict(s, S("(?[i]a, (?[j]b, ?[k]c))"), "i");
  REQUIRE(r.status == UpsetResult::Status::Defined);
  CHECK(r.restricted.text() == "(?[i]a, ?[j]b)");
  auto all = upset_restrict(s, S("(?[i]a, ?[i]b)"), "i");
  CHECK(all.restricted.text() == "(?[i]a, ?[i]b)");
  Signature nw = load_signature("label i :\nlabel j :\nlabel k :\norder i <= j\n");
  CHECK(upset_restrict(nw, S("(?[i]a, (?[j]b, ?[k]c))"), "i").status == UpsetResult::Status::Undefined);
  CHECK(upset_restrict(s, S("(?[i]a, b)"), "i").status == UpsetResult::Status::NotApplicable);
  auto empty = upset_restrict(s, Structure::empty(), "i");
  CHECK(empty.status == UpsetResult::Status::Defined);
  CHECK(empty.restricted.is_empty());
  // Everything erased.
  auto gone = upset_restrict(s, S("?[k]c"), "i");
  REQUIRE(gone.status == UpsetResult::Status::Defined);
  CHECK(gone.restricted.is_empty());
  // Mirror for the two-sided system.
  CHECK(upset_restrict(s, S("(![i]a, ![k]c)"), "i", Connective::Bang).restricted.text() == "![i]a");
}

TEST_CASE("adding W never makes a restriction undefined") {
  const char* ctx[] = {"(?[i]a, ?[k]b)", "(?[k]a, (?[j]b, ?[k]c))", "?[j]a"};
  Signature without = load_signature("label i :\nlabel j :\nlabel k :\norder i <= j\n");
  Signature with = load_signature("label i :\nlabel j :\nlabel k : W\norder i <= j\n");
  for (const char* c : ctx)
    for (const char* l : {"i", "j", "k"})
      if (upset_restrict(without, S(c), l).status == UpsetResult::Status::Defined)
        CHECK(upset_restrict(with, S(c), l).status == UpsetResult::Status::Defined);
}
