/* SPDX-License-Identifier: Apache-2.0 */
/*
 * C interface to the nacll prover. Objects are opaque handles released with
 * the matching *_free function. Strings returned through `char**` are
 * owned by the caller and released with nacll_string_free. Every function
 * returns a status; on failure nacll_last_error() describes it (per thread).
 */
#ifndef NACLL_H
#define NACLL_H

#include <stddef.h>

#if defined(_WIN32)
#define NACLL_API __declspec(dllexport)
#else
#define NACLL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum nacll_status {
  NACLL_OK = 0,
  NACLL_E_PARSE,
  NACLL_E_ILL_FORMED,
  NACLL_E_INVALID_PATH,
  NACLL_E_SIGNATURE,
  NACLL_E_NOT_APPLICABLE,
  NACLL_E_NOT_TRANSLATION,
  NACLL_E_SYSTEM_MISMATCH,
  NACLL_E_IO,
  NACLL_E_INTERNAL,
  NACLL_E_ARGUMENT,
  NACLL_E_CHECK /* the proof does not check */
} nacll_status;

typedef enum nacll_system { NACLL_SYS_CLASSICAL = 0, NACLL_SYS_INT, NACLL_SYS_INT_PLUS } nacll_system;

/* Values match the `prove` exit codes. */
typedef enum nacll_verdict { NACLL_PROVED = 0, NACLL_EXHAUSTED = 1, NACLL_BUDGET_EXCEEDED = 2 } nacll_verdict;

typedef enum nacll_polarity { NACLL_POSITIVE = 0, NACLL_NEGATIVE, NACLL_NEITHER } nacll_polarity;

typedef struct nacll_budget {
  int max_depth;
  int max_contractions;
  size_t max_visited;
  int memo; /* nonzero: identify classical states by canonical form */
} nacll_budget;

typedef struct nacll_signature nacll_signature;
typedef struct nacll_proof nacll_proof;

NACLL_API const char* nacll_last_error(void);
NACLL_API const char* nacll_status_name(nacll_status s);
NACLL_API void nacll_string_free(char* s);
NACLL_API nacll_budget nacll_default_budget(void);

NACLL_API nacll_status nacll_signature_parse(const char* text, nacll_signature** out);
NACLL_API nacll_status nacll_signature_empty(nacll_signature** out);
NACLL_API void nacll_signature_free(nacll_signature* sig);

NACLL_API nacll_status nacll_proof_parse(const char* text, nacll_proof** out);
NACLL_API void nacll_proof_free(nacll_proof* p);
NACLL_API nacll_status nacll_proof_to_sexp(const nacll_proof* p, char** out);
NACLL_API nacll_status nacll_proof_conclusion(const nacll_proof* p, char** out);
/* format: "text", "unicode" or "latex" */
NACLL_API nacll_status nacll_proof_render(const nacll_proof* p, const char* format, char** out);

/* NACLL_OK if the proof checks, NACLL_E_CHECK (with `violation` set when
 * non-null) if not. `strict` selects the classical checking mode. */
NACLL_API nacll_status nacll_check(const nacll_proof* p, const nacll_signature* sig, nacll_system sys, int zero,
                                   int strict, char** violation);

/* `proof` and `report` may be null. `budget` null means the defaults. */
NACLL_API nacll_status nacll_prove(const char* sequent, const nacll_signature* sig, nacll_system sys, int zero,
                                   const nacll_budget* budget, nacll_verdict* verdict, nacll_proof** proof,
                                   char** report);

NACLL_API nacll_status nacll_translate(const char* sequent, char** out);
/* Canonical representative of a one-sided sequent or a bare structure. */
NACLL_API nacll_status nacll_canonicalize(const char* text, char** out);
NACLL_API nacll_status nacll_classify(const char* formula, nacll_polarity* out);

NACLL_API nacll_status nacll_lift(const nacll_proof* p, const nacll_signature* sig, nacll_proof** out);
/* target: NACLL_SYS_INT or NACLL_SYS_INT_PLUS; `fallback` null means the
 * default budget. `fallbacks` (nullable) receives the number of nodes found
 * by search rather than by transformation. */
NACLL_API nacll_status nacll_lower(const nacll_proof* p, const nacll_signature* sig, nacll_system target,
                                   const nacll_budget* fallback, nacll_proof** out, int* fallbacks);

NACLL_API nacll_status nacll_corpus_run(const char* dir, int* passed, int* total, char** report);

#ifdef __cplusplus
}
#endif

#endif /* NACLL_H */
