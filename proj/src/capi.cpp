// SPDX-License-Identifier: Apache-2.0
#include "nacll/nacll.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "nacll/classical.hpp"
#include "nacll/corpus.hpp"
#include "nacll/embedding.hpp"
#include "nacll/equivalence.hpp"
#include "nacll/intuitionistic.hpp"
#include "nacll/render.hpp"
#include "nacll/search.hpp"

struct nacll_signature {
  nacll::Signature sig;
};

struct nacll_proof {
  nacll::Proof proof;
};

namespace {

thread_local std::string g_error;

nacll_status code_of(nacll::ErrorCode c) {
  using nacll::ErrorCode;
  switch (c) {
    case ErrorCode::Parse: return NACLL_E_PARSE;
    case ErrorCode::IllFormed: return NACLL_E_ILL_FORMED;
    case ErrorCode::InvalidPath: return NACLL_E_INVALID_PATH;
    case ErrorCode::Signature: return NACLL_E_SIGNATURE;
    case ErrorCode::NotApplicable: return NACLL_E_NOT_APPLICABLE;
    case ErrorCode::NotTranslation: return NACLL_E_NOT_TRANSLATION;
    case ErrorCode::SystemMismatch: return NACLL_E_SYSTEM_MISMATCH;
    case ErrorCode::Io: return NACLL_E_IO;
    case ErrorCode::Internal: return NACLL_E_INTERNAL;
  }
  return NACLL_E_INTERNAL;
}

nacll_status fail(nacll_status s, std::string msg) {
  g_error = std::move(msg);
  return s;
}

// Runs `f`, translating exceptions into status codes.
template <class F>
nacll_status guarded(F&& f) {
  try {
    g_error.clear();
    return f();
  } catch (const nacll::Error& e) {
    return fail(code_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(NACLL_E_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(NACLL_E_INTERNAL, e.what());
  }
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

nacll::Budget budget_of(const nacll_budget* b) {
  nacll::Budget out;
  if (!b) return out;
  out.max_depth = b->max_depth;
  out.max_contractions = b->max_contractions;
  out.max_visited = b->max_visited;
  out.memo = b->memo != 0;
  return out;
}

nacll::IConfig config_of(nacll_system sys, int zero) {
  return nacll::IConfig{sys == NACLL_SYS_INT_PLUS ? nacll::ISystem::ALL_PLUS : nacll::ISystem::ALL, zero != 0};
}

const nacll::Signature& sig_or_empty(const nacll_signature* s) {
  static const nacll::Signature empty;
  return s ? s->sig : empty;
}

bool bad_system(nacll_system s) { return s != NACLL_SYS_CLASSICAL && s != NACLL_SYS_INT && s != NACLL_SYS_INT_PLUS; }

}  // namespace

extern "C" {

const char* nacll_last_error(void) { return g_error.c_str(); }

const char* nacll_status_name(nacll_status s) {
  switch (s) {
    case NACLL_OK: return "ok";
    case NACLL_E_PARSE: return "parse error";
    case NACLL_E_ILL_FORMED: return "ill-formed input";
    case NACLL_E_INVALID_PATH: return "invalid path";
    case NACLL_E_SIGNATURE: return "signature error";
    case NACLL_E_NOT_APPLICABLE: return "not applicable";
    case NACLL_E_NOT_TRANSLATION: return "not a translation";
    case NACLL_E_SYSTEM_MISMATCH: return "system mismatch";
    case NACLL_E_IO: return "i/o error";
    case NACLL_E_INTERNAL: return "internal error";
    case NACLL_E_ARGUMENT: return "bad argument";
    case NACLL_E_CHECK: return "proof does not check";
  }
  return "unknown";
}

void nacll_string_free(char* s) { std::free(s); }

nacll_budget nacll_default_budget(void) {
  nacll::Budget b;
  return nacll_budget{b.max_depth, b.max_contractions, b.max_visited, b.memo ? 1 : 0};
}

nacll_status nacll_signature_parse(const char* text, nacll_signature** out) {
  if (!text || !out) return fail(NACLL_E_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new nacll_signature{nacll::load_signature(text)};
    return NACLL_OK;
  });
}

nacll_status nacll_signature_empty(nacll_signature** out) {
  if (!out) return fail(NACLL_E_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new nacll_signature{};
    return NACLL_OK;
  });
}

void nacll_signature_free(nacll_signature* sig) { delete sig; }

nacll_status nacll_proof_parse(const char* text, nacll_proof** out) {
  if (!text || !out) return fail(NACLL_E_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new nacll_proof{nacll::parse_proof(text)};
    return NACLL_OK;
  });
}

void nacll_proof_free(nacll_proof* p) { delete p; }

nacll_status nacll_proof_to_sexp(const nacll_proof* p, char** out) {
  if (!p || !out) return fail(NACLL_E_ARGUMENT, "null argument");
  return guarded([&] {
    *out = dup(nacll::to_sexp(p->proof));
    return NACLL_OK;
  });
}

nacll_status nacll_proof_conclusion(const nacll_proof* p, char** out) {
  if (!p || !out) return fail(NACLL_E_ARGUMENT, "null argument");
  return guarded([&] {
    *out = dup(p->proof.conclusion.text());
    return NACLL_OK;
  });
}

nacll_status nacll_proof_render(const nacll_proof* p, const char* format, char** out) {
  if (!p || !format || !out) return fail(NACLL_E_ARGUMENT, "null argument");
  auto fmt = nacll::render_format_from_name(format);
  if (!fmt) return fail(NACLL_E_ARGUMENT, std::string("unknown render format: ") + format);
  return guarded([&] {
    *out = dup(nacll::render(p->proof, *fmt));
    return NACLL_OK;
  });
}

nacll_status nacll_check(const nacll_proof* p, const nacll_signature* sig, nacll_system sys, int zero, int strict,
                         char** violation) {
  if (!p) return fail(NACLL_E_ARGUMENT, "null argument");
  if (bad_system(sys)) return fail(NACLL_E_ARGUMENT, "unknown system");
  if (violation) *violation = nullptr;
  return guarded([&] {
    const nacll::Signature& s = sig_or_empty(sig);
    auto v = sys == NACLL_SYS_CLASSICAL
                 ? nacll::check_proof(p->proof, s, strict ? nacll::Mode::Strict : nacll::Mode::Modulo)
                 : nacll::check_proof_i(p->proof, s, config_of(sys, zero));
    if (!v) return NACLL_OK;
    std::string msg = v->where() + ": " + v->message;
    if (violation) *violation = dup(msg);
    return fail(NACLL_E_CHECK, msg);
  });
}

nacll_status nacll_prove(const char* sequent, const nacll_signature* sig, nacll_system sys, int zero,
                         const nacll_budget* budget, nacll_verdict* verdict, nacll_proof** proof, char** report) {
  if (!sequent || !verdict) return fail(NACLL_E_ARGUMENT, "null argument");
  if (bad_system(sys)) return fail(NACLL_E_ARGUMENT, "unknown system");
  if (budget && (budget->max_depth < 0 || budget->max_contractions < 0))
    return fail(NACLL_E_ARGUMENT, "budget values must be non-negative");
  if (proof) *proof = nullptr;
  if (report) *report = nullptr;
  return guarded([&] {
    nacll::Sequent s = nacll::parse_sequent(sequent);
    const nacll::Signature& sg = sig_or_empty(sig);
    nacll::Budget b = budget_of(budget);
    nacll::SearchOutcome o = sys == NACLL_SYS_CLASSICAL ? nacll::prove_classical(s, sg, b)
                                                        : nacll::prove_intuitionistic(s, sg, config_of(sys, zero), b);
    switch (o.status) {
      case nacll::SearchOutcome::Status::Proved: *verdict = NACLL_PROVED; break;
      case nacll::SearchOutcome::Status::Exhausted: *verdict = NACLL_EXHAUSTED; break;
      case nacll::SearchOutcome::Status::BudgetExceeded: *verdict = NACLL_BUDGET_EXCEEDED; break;
    }
    if (report) *report = dup(o.report);
    if (proof && o.proof) *proof = new nacll_proof{std::move(*o.proof)};
    return NACLL_OK;
  });
}

nacll_status nacll_translate(const char* sequent, char** out) {
  if (!sequent || !out) return fail(NACLL_E_ARGUMENT, "null argument");
  return guarded([&] {
    nacll::Sequent s = nacll::parse_sequent(sequent);
    nacll::require_intuitionistic(s, true);
    *out = dup(nacll::translate_sequent(s).text());
    return NACLL_OK;
  });
}

nacll_status nacll_canonicalize(const char* text, char** out) {
  if (!text || !out) return fail(NACLL_E_ARGUMENT, "null argument");
  return guarded([&] {
    std::string t = text;
    if (t.find("|-") != std::string::npos) {
      nacll::Sequent s = nacll::parse_sequent(t);
      if (s.goal) return fail(NACLL_E_ILL_FORMED, "canonical forms are defined for one-sided sequents");
      *out = dup(nacll::Sequent::classical(nacll::canonicalize(s.context)).text());
    } else {
      *out = dup(nacll::canonicalize(nacll::parse_structure(t)).text());
    }
    return NACLL_OK;
  });
}

nacll_status nacll_classify(const char* formula, nacll_polarity* out) {
  if (!formula || !out) return fail(NACLL_E_ARGUMENT, "null argument");
  return guarded([&] {
    switch (nacll::classify(nacll::parse_formula(formula))) {
      case nacll::Polarity::Positive: *out = NACLL_POSITIVE; break;
      case nacll::Polarity::Negative: *out = NACLL_NEGATIVE; break;
      case nacll::Polarity::Neither: *out = NACLL_NEITHER; break;
    }
    return NACLL_OK;
  });
}

nacll_status nacll_lift(const nacll_proof* p, const nacll_signature* sig, nacll_proof** out) {
  if (!p || !out) return fail(NACLL_E_ARGUMENT, "null argument");
  return guarded([&] {
    *out = new nacll_proof{nacll::lift_proof(p->proof, sig_or_empty(sig))};
    return NACLL_OK;
  });
}

nacll_status nacll_lower(const nacll_proof* p, const nacll_signature* sig, nacll_system target,
                         const nacll_budget* fallback, nacll_proof** out, int* fallbacks) {
  if (!p || !out) return fail(NACLL_E_ARGUMENT, "null argument");
  if (target != NACLL_SYS_INT && target != NACLL_SYS_INT_PLUS)
    return fail(NACLL_E_ARGUMENT, "lowering targets int or int-plus");
  return guarded([&] {
    nacll::LowerOptions opt;
    opt.target = config_of(target, 0);
    opt.fallback = budget_of(fallback);
    nacll::Proof l = nacll::lower_proof(p->proof, sig_or_empty(sig), opt);
    if (fallbacks) *fallbacks = nacll::fallback_count(l);
    *out = new nacll_proof{std::move(l)};
    return NACLL_OK;
  });
}

nacll_status nacll_corpus_run(const char* dir, int* passed, int* total, char** report) {
  if (!dir) return fail(NACLL_E_ARGUMENT, "null argument");
  if (report) *report = nullptr;
  return guarded([&] {
    auto results = nacll::run_corpus(nacll::load_cases(dir));
    int ok = 0;
    for (const auto& r : results) ok += r.pass;
    if (passed) *passed = ok;
    if (total) *total = static_cast<int>(results.size());
    if (report) *report = dup(nacll::format_report(results));
    return NACLL_OK;
  });
}

}  // extern "C"
