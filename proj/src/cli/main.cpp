// SPDX-License-Identifier: Apache-2.0
//
// nacll command-line front end. Talks to the prover only through nacll.h.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "nacll/nacll.h"

namespace {

// Exit codes beyond the prove verdicts.
constexpr int kCheckFailed = 1;
constexpr int kUsage = 3;
constexpr int kError = 4;

struct Failure {
  int code;
  std::string message;
};

using SigPtr = std::unique_ptr<nacll_signature, decltype(&nacll_signature_free)>;
using ProofPtr = std::unique_ptr<nacll_proof, decltype(&nacll_proof_free)>;

struct Str {
  char* p = nullptr;
  ~Str() { nacll_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

void ok(nacll_status s) {
  if (s != NACLL_OK) throw Failure{kError, std::string(nacll_status_name(s)) + ": " + nacll_last_error()};
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kError, "cannot open " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw Failure{kError, "cannot write " + path};
}

SigPtr load_sig(const std::string& path) {
  nacll_signature* s = nullptr;
  if (path.empty()) ok(nacll_signature_empty(&s));
  else ok(nacll_signature_parse(read_input(path).c_str(), &s));
  return SigPtr(s, nacll_signature_free);
}

ProofPtr load_proof(const std::string& path) {
  nacll_proof* p = nullptr;
  ok(nacll_proof_parse(read_input(path).c_str(), &p));
  return ProofPtr(p, nacll_proof_free);
}

nacll_system system_of(const std::string& s) {
  if (s == "int") return NACLL_SYS_INT;
  if (s == "int-plus") return NACLL_SYS_INT_PLUS;
  return NACLL_SYS_CLASSICAL;
}

std::string sexp(const nacll_proof* p) {
  Str s;
  ok(nacll_proof_to_sexp(p, &s.p));
  return s.str();
}

std::string rendered(const nacll_proof* p, const std::string& fmt) {
  Str s;
  ok(nacll_proof_render(p, fmt.c_str(), &s.p));
  return s.str();
}

// Prints or writes a proof as the flags ask: S-expression by default.
void emit(const nacll_proof* p, const std::string& emit_path, const std::string& render) {
  if (!emit_path.empty()) write_output(emit_path, sexp(p));
  if (!render.empty()) std::cout << rendered(p, render);
  else if (emit_path.empty()) std::cout << sexp(p);
}

struct Options {
  std::string sig;
  std::string sys = "classical";
  bool zero = false;
  int depth = 14;
  int contractions = 2;
  std::size_t visited = 200000;
  bool no_memo = false;
  std::string emit;
  std::string render;
  std::string mode = "strict";
  std::string input;
};

void add_common(CLI::App* app, Options& o) {
  app->add_option("--sig", o.sig, "signature file")->check(CLI::ExistingFile);
  app->add_option("--sys", o.sys, "logic")->check(CLI::IsMember({"classical", "int", "int-plus"}));
  app->add_flag("--zero", o.zero, "admit 0 and its left rule (intuitionistic)");
}

void add_budget(CLI::App* app, Options& o) {
  app->add_option("--depth", o.depth, "rule applications per branch")->check(CLI::NonNegativeNumber);
  app->add_option("--contractions", o.contractions, "contractions per branch")->check(CLI::NonNegativeNumber);
  app->add_option("--visited", o.visited, "distinct states explored");
  app->add_flag("--no-memo", o.no_memo, "identify classical states by printed form, not canonical form");
}

void add_output(CLI::App* app, Options& o) {
  app->add_option("--emit", o.emit, "write the proof to this file");
  app->add_option("--render", o.render, "print the proof as text, unicode or latex")
      ->check(CLI::IsMember({"text", "unicode", "latex"}));
}

nacll_budget budget_of(const Options& o) {
  nacll_budget b = nacll_default_budget();
  b.max_depth = o.depth;
  b.max_contractions = o.contractions;
  b.max_visited = o.visited;
  b.memo = o.no_memo ? 0 : 1;
  return b;
}

int cmd_prove(const Options& o) {
  SigPtr sig = load_sig(o.sig);
  nacll_budget b = budget_of(o);
  nacll_verdict v{};
  nacll_proof* raw = nullptr;
  Str report;
  ok(nacll_prove(o.input.c_str(), sig.get(), system_of(o.sys), o.zero, &b, &v, &raw, &report.p));
  ProofPtr proof(raw, nacll_proof_free);
  const char* names[] = {"Proved", "Exhausted", "BudgetExceeded"};
  std::cout << names[v] << ": " << report.str() << "\n";
  if (proof) emit(proof.get(), o.emit, o.render);
  return static_cast<int>(v);
}

int cmd_check(const Options& o) {
  SigPtr sig = load_sig(o.sig);
  ProofPtr p = load_proof(o.input);
  Str why;
  nacll_status s = nacll_check(p.get(), sig.get(), system_of(o.sys), o.zero, o.mode == "strict", &why.p);
  if (s == NACLL_E_CHECK) {
    std::cout << "FAIL " << why.str() << "\n";
    return kCheckFailed;
  }
  ok(s);
  Str concl;
  ok(nacll_proof_conclusion(p.get(), &concl.p));
  std::cout << "OK " << concl.str() << "\n";
  return 0;
}

int cmd_translate(const Options& o) {
  Str out;
  ok(nacll_translate(o.input.c_str(), &out.p));
  std::cout << out.str() << "\n";
  return 0;
}

int cmd_canon(const Options& o) {
  Str out;
  ok(nacll_canonicalize(o.input.c_str(), &out.p));
  std::cout << out.str() << "\n";
  return 0;
}

int cmd_lift(const Options& o) {
  SigPtr sig = load_sig(o.sig);
  ProofPtr p = load_proof(o.input);
  nacll_proof* raw = nullptr;
  ok(nacll_lift(p.get(), sig.get(), &raw));
  ProofPtr lifted(raw, nacll_proof_free);
  emit(lifted.get(), o.emit, o.render);
  return 0;
}

int cmd_lower(const Options& o) {
  SigPtr sig = load_sig(o.sig);
  ProofPtr p = load_proof(o.input);
  nacll_budget b = budget_of(o);
  nacll_proof* raw = nullptr;
  int fallbacks = 0;
  nacll_system target = o.sys == "int-plus" ? NACLL_SYS_INT_PLUS : NACLL_SYS_INT;
  ok(nacll_lower(p.get(), sig.get(), target, &b, &raw, &fallbacks));
  ProofPtr lowered(raw, nacll_proof_free);
  if (fallbacks > 0) std::cerr << fallbacks << " node(s) found by bounded search\n";
  emit(lowered.get(), o.emit, o.render);
  return 0;
}

int cmd_render(const Options& o) {
  ProofPtr p = load_proof(o.input);
  std::cout << rendered(p.get(), o.render.empty() ? "text" : o.render);
  return 0;
}

int cmd_corpus(const Options& o) {
  int passed = 0, total = 0;
  Str report;
  ok(nacll_corpus_run(o.input.c_str(), &passed, &total, &report.p));
  std::cout << report.str();
  return passed == total ? 0 : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Prover and proof checker for non-associative non-commutative linear logic with subexponentials"};
  app.require_subcommand(1);
  Options o;

  auto* prove = app.add_subcommand("prove", "search for a cut-free proof (exit 0 Proved, 1 Exhausted, 2 BudgetExceeded)");
  prove->add_option("sequent", o.input, "e.g. \"|- (a^, a)\" or \"a |- a\"")->required();
  add_common(prove, o);
  add_budget(prove, o);
  add_output(prove, o);

  auto* check = app.add_subcommand("check", "check a proof file (exit 0 ok, 1 not ok)");
  check->add_option("proof", o.input, "proof file, or - for stdin")->required();
  add_common(check, o);
  check->add_option("--mode", o.mode, "classical checking mode")->check(CLI::IsMember({"strict", "modulo"}));

  auto* translate = app.add_subcommand("translate", "print the classical translation of an intuitionistic sequent");
  translate->add_option("sequent", o.input)->required();

  auto* lift = app.add_subcommand("lift", "turn an intuitionistic proof into a classical one");
  lift->add_option("proof", o.input, "proof file, or - for stdin")->required();
  lift->add_option("--sig", o.sig, "signature file")->check(CLI::ExistingFile);
  add_output(lift, o);

  auto* lower = app.add_subcommand("lower", "turn a classical proof of a translation into an intuitionistic one");
  lower->add_option("proof", o.input, "proof file, or - for stdin")->required();
  add_common(lower, o);
  add_budget(lower, o);
  add_output(lower, o);

  auto* canon = app.add_subcommand("canon", "print the canonical form of a one-sided sequent or structure");
  canon->add_option("input", o.input)->required();

  auto* corpus = app.add_subcommand("corpus", "run every case file in a directory");
  corpus->add_option("dir", o.input)->required()->check(CLI::ExistingDirectory);

  auto* render = app.add_subcommand("render", "print a proof file");
  render->add_option("proof", o.input, "proof file, or - for stdin")->required();
  render->add_option("--render", o.render, "text, unicode or latex")
      ->check(CLI::IsMember({"text", "unicode", "latex"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  try {
    if (*prove) return cmd_prove(o);
    if (*check) return cmd_check(o);
    if (*translate) return cmd_translate(o);
    if (*lift) return cmd_lift(o);
    if (*lower) return cmd_lower(o);
    if (*canon) return cmd_canon(o);
    if (*corpus) return cmd_corpus(o);
    if (*render) return cmd_render(o);
  } catch (const Failure& f) {
    std::cerr << "nacll: " << f.message << "\n";
    return f.code;
  }
  return kUsage;
}
