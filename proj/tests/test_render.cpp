// SPDX-License-Identifier: Apache-2.0
#include <sstream>

#include "doctest.h"
#include "nacll/render.hpp"
#include "support.hpp"

using namespace nacll;

namespace {

void preorder(const Proof& p, std::vector<std::string>& out) {
  out.push_back(rule_name(p.rule));
  for (const Proof& q : p.premises) preorder(q, out);
}

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("text rendering of an axiom") {
  Proof p = parse_proof("(rule Init :seq \"|- (a, a^)\")");
  CHECK(render(p, RenderFormat::Text) == "Init  |- (a, a^)\n");
  CHECK(render(p, RenderFormat::Unicode) == "Init  ⊢ (a, a⊥)\n");
}

TEST_CASE("text rendering keeps the rule sequence") {
  for (const char* name : {"assoc-classical.sexp", "zero-classical.sexp", "exchange.sexp", "impl-identity.sexp"}) {
    Proof p = testsupport::golden(name);
    std::vector<std::string> want;
    preorder(p, want);
    std::istringstream in(render(p, RenderFormat::Text));
    std::vector<std::string> got;
    std::string line;
    while (std::getline(in, line)) {
      std::istringstream ls(line);
      std::string rule;
      ls >> rule;
      got.push_back(rule.substr(0, rule.find('[')));
    }
    CHECK(got == want);
  }
}

TEST_CASE("latex rendering is a well-formed bussproofs tree") {
  for (const char* name : {"assoc-classical.sexp", "zero-classical.sexp", "reassoc.sexp", "unit-pair.sexp"}) {
    Proof p = testsupport::golden(name);
    std::string tex = render(p, RenderFormat::Latex);
    std::size_t axioms = 0, nodes = 0;
    std::vector<const Proof*> stack{&p};
    while (!stack.empty()) {
      const Proof* q = stack.back();
      stack.pop_back();
      ++nodes;
      if (q->premises.empty()) ++axioms;
      for (const Proof& r : q->premises) stack.push_back(&r);
    }
    CHECK(count(tex, "\\AxiomC{}") == axioms);
    CHECK(count(tex, "InfC{") == nodes);
    CHECK(count(tex, "{") == count(tex, "}"));
    CHECK(count(tex, "\\begin{prooftree}") == 1);
    CHECK(tex.find('#') == std::string::npos);
  }
}

TEST_CASE("formula printers") {
  Formula f = parse_formula("(?[a]c^ # (b -> 1))");
  CHECK(render_formula(f, RenderFormat::Text) == f.text());
  CHECK(render_formula(f, RenderFormat::Latex) == "(?^{a}c^{\\perp} \\parr (b \\rightarrow 1))");
  CHECK(render_sequent(parse_sequent("() |- a"), RenderFormat::Text) == "|- a");
  CHECK(render_format_from_name("latex") == RenderFormat::Latex);
  CHECK_FALSE(render_format_from_name("html"));
}
