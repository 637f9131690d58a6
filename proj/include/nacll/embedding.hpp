// SPDX-License-Identifier: Apache-2.0
//
// The hat translation from intuitionistic to classical formulas, the
// polarity recognizers on its image, and proof transport both ways.
#pragma once

#include <optional>

#include "nacll/intuitionistic.hpp"
#include "nacll/proof.hpp"
#include "nacll/search.hpp"
#include "nacll/signature.hpp"
#include "nacll/syntax.hpp"

namespace nacll {

/// p^ = p, (A -> B)^ = A^~ # B^, (B <- A)^ = B^ # A^~ (~ is classical
/// negation), homomorphic elsewhere; 0^ = 0.
Formula hat(const Formula& f);

/// Negated translation of an antecedent: pair order is reversed at every
/// node and each leaf becomes the negation of its hat.
Structure hat_dual(const Structure& antecedent);

/// |- (hat_dual(G), A^) for G |- A.
Sequent translate_sequent(const Sequent& s);

enum class Polarity { Positive, Negative, Neither };

const char* polarity_name(Polarity p);

/// Positive: C^ for some intuitionistic C. Negative: the negation of one.
/// 0 is classified as Negative, as the negation of top.
Polarity classify(const Formula& f);

/// 0 on Positive, 1 on Negative, nothing otherwise.
std::optional<int> h_count(const Formula& f);

/// Inverse of hat on Positive formulas and of negate . hat on Negative ones.
/// Throws NotTranslation on anything else.
Formula unhat(const Formula& f);
Formula unhat_negative(const Formula& f);

/// Path of the unique Positive leaf, if there is exactly one. Throws
/// NotTranslation when some leaf is Neither.
std::optional<Path> polarizable(const Sequent& s);

/// The intuitionistic sequent whose translation is equivalent to `s`.
/// Throws NotTranslation if there is none.
Sequent recover_sequent(const Sequent& s);

struct LiftedStep {
  Rule rule = Rule::Init;
  std::vector<Path> at;
  /// Classical premise k is the translation of intuitionistic premise order[k].
  std::vector<std::size_t> order;
};

/// The classical step deriving the translation of one intuitionistic step
/// from the translations of its premises, in modulo mode. Throws Internal
/// if there is none.
LiftedStep lift_step(Rule rule, const Sequent& conclusion, const std::vector<Path>& at,
                     const std::optional<std::string>& label, const std::vector<Sequent>& premises,
                     const Signature& sig);

/// Classical proof of translate_sequent(p.conclusion), checking in modulo
/// mode. `p` must be a checking intuitionistic proof.
Proof lift_proof(const Proof& p, const Signature& sig);

struct LowerOptions {
  IConfig target;
  /// Budget for nodes whose shape matches no case; 0 disables the fallback.
  Budget fallback;
  bool allow_fallback = true;
};

/// Intuitionistic proof of recover_sequent(p.conclusion). Nodes obtained by
/// bounded search instead of transformation carry a note saying so.
/// Targeting ALL requires every label's axioms to lie within {C, W, E}.
Proof lower_proof(const Proof& p, const Signature& sig, const LowerOptions& opt);

/// Number of nodes in `p` produced by the search fallback.
int fallback_count(const Proof& p);

}  // namespace nacll
