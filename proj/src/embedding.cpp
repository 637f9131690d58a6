// SPDX-License-Identifier: Apache-2.0
#include "nacll/embedding.hpp"

#include <algorithm>
#include <functional>
#include <initializer_list>

#include "nacll/classical.hpp"
#include "nacll/equivalence.hpp"

namespace nacll {

Formula hat(const Formula& f) {
  switch (f.kind()) {
    case Connective::Atom:
    case Connective::One:
    case Connective::Top:
    case Connective::Zero: return f;
    case Connective::Tensor: return Formula::tensor(hat(f.lhs()), hat(f.rhs()));
    case Connective::Plus: return Formula::plus(hat(f.lhs()), hat(f.rhs()));
    case Connective::With: return Formula::with(hat(f.lhs()), hat(f.rhs()));
    case Connective::Bang: return Formula::bang(f.label(), hat(f.body()));
    case Connective::ImplR: return Formula::par(negate(hat(f.lhs())), hat(f.rhs()));
    case Connective::ImplL: return Formula::par(hat(f.lhs()), negate(hat(f.rhs())));
    default: throw Error(ErrorCode::IllFormed, "not an intuitionistic formula: " + f.text());
  }
}

Structure hat_dual(const Structure& s) {
  switch (s.kind()) {
    case Structure::Kind::Empty: return s;
    case Structure::Kind::Leaf: return Structure::leaf(negate(hat(s.formula())));
    case Structure::Kind::Pair: return Structure::pair(hat_dual(s.right()), hat_dual(s.left()));
  }
  return s;
}

Sequent translate_sequent(const Sequent& s) {
  if (!s.goal) throw Error(ErrorCode::IllFormed, "expected an intuitionistic sequent: " + s.text());
  return Sequent::classical(Structure::pair(hat_dual(s.context), Structure::leaf(hat(*s.goal))));
}

const char* polarity_name(Polarity p) {
  switch (p) {
    case Polarity::Positive: return "Positive";
    case Polarity::Negative: return "Negative";
    case Polarity::Neither: return "Neither";
  }
  return "?";
}

Polarity classify(const Formula& f) {
  using P = Polarity;
  auto both = [&](P want) { return classify(f.lhs()) == want && classify(f.rhs()) == want; };
  switch (f.kind()) {
    case Connective::Atom:
    case Connective::One:
    case Connective::Top: return P::Positive;
    case Connective::NegAtom:
    case Connective::Bot:
    case Connective::Zero: return P::Negative;
    case Connective::Bang: return classify(f.body()) == P::Positive ? P::Positive : P::Neither;
    case Connective::Quest: return classify(f.body()) == P::Negative ? P::Negative : P::Neither;
    case Connective::Plus:
    case Connective::With:
      if (both(P::Positive)) return P::Positive;
      if (both(P::Negative)) return P::Negative;
      return P::Neither;
    case Connective::Tensor: {
      P l = classify(f.lhs()), r = classify(f.rhs());
      if (l == P::Positive && r == P::Positive) return P::Positive;
      if (l != P::Neither && r != P::Neither && l != r) return P::Negative;
      return P::Neither;
    }
    case Connective::Par: {
      P l = classify(f.lhs()), r = classify(f.rhs());
      if (l == P::Negative && r == P::Negative) return P::Negative;
      if (l != P::Neither && r != P::Neither && l != r) return P::Positive;
      return P::Neither;
    }
    default: return P::Neither;
  }
}

std::optional<int> h_count(const Formula& f) {
  switch (classify(f)) {
    case Polarity::Positive: return 0;
    case Polarity::Negative: return 1;
    case Polarity::Neither: break;
  }
  return std::nullopt;
}

namespace {

[[noreturn]] void not_translation(const Formula& f, const char* what) {
  throw Error(ErrorCode::NotTranslation, f.text() + " is not " + what);
}

}  // namespace

Formula unhat(const Formula& f) {
  if (classify(f) != Polarity::Positive) not_translation(f, "the translation of a formula");
  switch (f.kind()) {
    case Connective::Atom:
    case Connective::One:
    case Connective::Top: return f;
    case Connective::Tensor: return Formula::tensor(unhat(f.lhs()), unhat(f.rhs()));
    case Connective::Plus: return Formula::plus(unhat(f.lhs()), unhat(f.rhs()));
    case Connective::With: return Formula::with(unhat(f.lhs()), unhat(f.rhs()));
    case Connective::Bang: return Formula::bang(f.label(), unhat(f.body()));
    case Connective::Par:
      if (classify(f.lhs()) == Polarity::Negative) return Formula::impl_r(unhat_negative(f.lhs()), unhat(f.rhs()));
      return Formula::impl_l(unhat(f.lhs()), unhat_negative(f.rhs()));
    default: not_translation(f, "the translation of a formula");
  }
}

Formula unhat_negative(const Formula& f) {
  if (classify(f) != Polarity::Negative) not_translation(f, "a negated translation");
  switch (f.kind()) {
    case Connective::NegAtom: return Formula::atom(f.name());
    case Connective::Bot: return Formula::one();
    case Connective::Zero: return Formula::top();
    case Connective::Par: return Formula::tensor(unhat_negative(f.rhs()), unhat_negative(f.lhs()));
    case Connective::With: return Formula::plus(unhat_negative(f.lhs()), unhat_negative(f.rhs()));
    case Connective::Plus: return Formula::with(unhat_negative(f.lhs()), unhat_negative(f.rhs()));
    case Connective::Quest: return Formula::bang(f.label(), unhat_negative(f.body()));
    case Connective::Tensor:
      // (A -> B)^~ = B^~ * A^ and (B <- A)^~ = A^ * B^~
      if (classify(f.lhs()) == Polarity::Negative) return Formula::impl_r(unhat(f.rhs()), unhat_negative(f.lhs()));
      return Formula::impl_l(unhat_negative(f.rhs()), unhat(f.lhs()));
    default: not_translation(f, "a negated translation");
  }
}

std::optional<Path> polarizable(const Sequent& s) {
  std::optional<Path> found;
  int positives = 0;
  for (const auto& [p, f] : leaves(s.context)) {
    Polarity c = classify(f);
    if (c == Polarity::Neither) not_translation(f, "a translation or a negated translation");
    if (c == Polarity::Positive) {
      ++positives;
      found = p;
    }
  }
  if (positives != 1) return std::nullopt;
  return found;
}

namespace {

Structure unhat_dual(const Structure& s) {
  switch (s.kind()) {
    case Structure::Kind::Empty: return s;
    case Structure::Kind::Leaf: return Structure::leaf(unhat_negative(s.formula()));
    case Structure::Kind::Pair: return Structure::pair(unhat_dual(s.right()), unhat_dual(s.left()));
  }
  return s;
}

}  // namespace

Sequent recover_sequent(const Sequent& s) {
  if (s.goal) throw Error(ErrorCode::NotTranslation, "expected a one-sided sequent: " + s.text());
  auto pos = polarizable(s);
  if (!pos) throw Error(ErrorCode::NotTranslation, "not intuitionistically polarizable: " + s.text());
  Rotation r = rotate(s.context, *pos);
  return Sequent::intuitionistic(unhat_dual(r.rest), unhat(r.principal.formula()));
}

// -- Lifting -----------------------------------------------------------------

namespace {

std::vector<Rule> lift_candidates(Rule r) {
  switch (r) {
    case Rule::Id: return {Rule::Init};
    case Rule::TensorR:
    case Rule::ArrowL:
    case Rule::BackL: return {Rule::Tensor};
    case Rule::TensorL:
    case Rule::ArrowR:
    case Rule::BackR: return {Rule::Par};
    case Rule::WithL1:
    case Rule::OplusR1: return {Rule::PlusL};
    case Rule::WithL2:
    case Rule::OplusR2: return {Rule::PlusR};
    case Rule::WithR:
    case Rule::OplusL: return {Rule::With};
    case Rule::OneL: return {Rule::BotIntro};
    case Rule::OneR: return {Rule::OneAx};
    case Rule::TopR:
    case Rule::ZeroL: return {Rule::TopAx};
    case Rule::BangL: return {Rule::Der};
    case Rule::BangR: return {Rule::Prom};
    case Rule::BangW: return {Rule::QW};
    case Rule::BangC: return {Rule::QC};
    case Rule::BangE: return {Rule::QE};
    case Rule::A1L:
    case Rule::A1M:
    case Rule::A1R:
    case Rule::A2L:
    case Rule::A2M:
    case Rule::A2R: return {Rule::QA1, Rule::QA2};
    default: return {};
  }
}

// Antecedent paths move under the left child with every step mirrored.
Path dual_path(const Path& p) {
  std::vector<Dir> steps{Dir::L};
  for (Dir d : p.steps) steps.push_back(d == Dir::L ? Dir::R : Dir::L);
  return Path(std::move(steps));
}

}  // namespace

LiftedStep lift_step(Rule rule, const Sequent& conclusion, const std::vector<Path>& at,
                     const std::optional<std::string>& label, const std::vector<Sequent>& premises,
                     const Signature& sig) {
  if (!is_intuitionistic_rule(rule))
    throw Error(ErrorCode::SystemMismatch, std::string("not an intuitionistic rule: ") + rule_name(rule));
  Sequent concl = translate_sequent(conclusion);
  LiftedStep out;
  if (rule == Rule::BangC)
    for (const Path& a : at) out.at.push_back(dual_path(a));
  for (std::size_t i = 0; i < premises.size(); ++i) out.order.push_back(i);
  std::string last;
  // Classical premises may come in the other order.
  do {
    std::vector<Sequent> prems;
    for (std::size_t i : out.order) prems.push_back(translate_sequent(premises[i]));
    for (Rule c : lift_candidates(rule)) {
      StepResult r = check_step(c, concl, out.at, label, prems, sig, Mode::Modulo);
      if (r.ok()) {
        out.rule = c;
        return out;
      }
      if (last.empty()) last = r.error;
    }
  } while (std::next_permutation(out.order.begin(), out.order.end()));
  throw Error(ErrorCode::Internal,
              std::string("no classical step lifts ") + rule_name(rule) + " at " + conclusion.text() + ": " + last);
}

Proof lift_proof(const Proof& p, const Signature& sig) {
  std::vector<Sequent> prems;
  for (const Proof& q : p.premises) prems.push_back(q.conclusion);
  LiftedStep step = lift_step(p.rule, p.conclusion, p.at, p.label, prems, sig);
  Proof out;
  out.rule = step.rule;
  out.conclusion = translate_sequent(p.conclusion);
  out.at = step.at;
  out.label = p.label;
  for (std::size_t i : step.order) out.premises.push_back(lift_proof(p.premises[i], sig));
  return out;
}

// -- Lowering ----------------------------------------------------------------

namespace {

std::vector<Rule> lower_candidates(Rule r) {
  switch (r) {
    case Rule::Init: return {Rule::Id};
    case Rule::Tensor: return {Rule::TensorR, Rule::ArrowL, Rule::BackL};
    case Rule::Par: return {Rule::TensorL, Rule::ArrowR, Rule::BackR};
    case Rule::PlusL: return {Rule::WithL1, Rule::OplusR1};
    case Rule::PlusR: return {Rule::WithL2, Rule::OplusR2};
    case Rule::With: return {Rule::WithR, Rule::OplusL};
    case Rule::BotIntro: return {Rule::OneL};
    case Rule::OneAx: return {Rule::OneR};
    case Rule::TopAx: return {Rule::TopR, Rule::ZeroL};
    case Rule::Der: return {Rule::BangL};
    case Rule::Prom: return {Rule::BangR};
    case Rule::QW: return {Rule::BangW};
    case Rule::QC: return {Rule::BangC};
    case Rule::QE: return {Rule::BangE};
    case Rule::QA1:
    case Rule::QA2: return {Rule::A1L, Rule::A1M, Rule::A1R, Rule::A2L, Rule::A2M, Rule::A2R};
    default: return {};
  }
}

constexpr const char* kFallbackNote = "fallback: found by bounded search";

class Lowerer {
 public:
  Lowerer(const Signature& sig, const LowerOptions& opt) : sig_(sig), opt_(opt) {}

  Proof lower(const Proof& p, const Sequent& goal) {
    std::vector<std::optional<Sequent>> prems;
    for (const Proof& q : p.premises) prems.push_back(try_recover(q.conclusion));
    // Steps invisible on the intuitionistic side.
    if (prems.size() == 1 && prems[0] && *prems[0] == goal) return lower(p.premises[0], goal);
    bool all = std::all_of(prems.begin(), prems.end(), [](const auto& s) { return s.has_value(); });
    if (all) {
      for (Rule r : lower_candidates(p.rule)) {
        if (!rule_in_system(r, opt_.target)) continue;
        std::vector<IInstance> insts = r == Rule::BangC ? contraction_instances(goal, sig_)
                                                        : instances_i(r, goal, {}, std::nullopt, sig_, opt_.target);
        for (const IInstance& inst : insts) {
          auto order = match(inst.premises, prems);
          if (!order) continue;
          Proof out;
          out.rule = r;
          out.conclusion = goal;
          out.at = inst.at;
          out.label = inst.label;
          for (std::size_t k = 0; k < order->size(); ++k)
            out.premises.push_back(lower(p.premises[(*order)[k]], inst.premises[k]));
          return out;
        }
      }
    }
    return fallback(goal, p);
  }

 private:
  static std::optional<Sequent> try_recover(const Sequent& s) {
    try {
      return recover_sequent(s);
    } catch (const Error&) {
      return std::nullopt;
    }
  }

  // For each instance premise, the index of the classical premise it equals.
  static std::optional<std::vector<std::size_t>> match(const std::vector<Sequent>& want,
                                                       const std::vector<std::optional<Sequent>>& have) {
    if (want.size() != have.size()) return std::nullopt;
    std::vector<std::size_t> idx(have.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    do {
      bool ok = true;
      for (std::size_t k = 0; k < want.size() && ok; ++k) ok = *have[idx[k]] == want[k];
      if (ok) return idx;
    } while (std::next_permutation(idx.begin(), idx.end()));
    return std::nullopt;
  }

  Proof fallback(const Sequent& goal, const Proof& p) {
    if (!opt_.allow_fallback)
      throw Error(ErrorCode::NotApplicable, std::string("no intuitionistic case matches ") + rule_name(p.rule) +
                                                " at " + p.conclusion.text());
    SearchOutcome o = prove_intuitionistic(goal, sig_, opt_.target, opt_.fallback);
    if (!o.proof)
      throw Error(ErrorCode::NotApplicable, std::string("no intuitionistic case matches ") + rule_name(p.rule) +
                                                " at " + p.conclusion.text() + " and search gave " +
                                                status_name(o.status));
    o.proof->note = kFallbackNote;
    return *o.proof;
  }

  const Signature& sig_;
  const LowerOptions& opt_;
};

int count_notes(const Proof& p) {
  int n = p.note == kFallbackNote ? 1 : 0;
  for (const Proof& q : p.premises) n += count_notes(q);
  return n;
}

}  // namespace

Proof lower_proof(const Proof& p, const Signature& sig, const LowerOptions& opt) {
  if (opt.target.system == ISystem::ALL && !sig.axioms_within(AxiomSet{Axiom::C, Axiom::W, Axiom::E}))
    throw Error(ErrorCode::SystemMismatch,
                "the signature licenses associativity; lowering needs the int-plus system");
  Sequent goal = recover_sequent(p.conclusion);
  if (!equivalent(translate_sequent(goal).context, p.conclusion.context))
    throw Error(ErrorCode::NotTranslation, "not the translation of an intuitionistic sequent: " + p.conclusion.text());
  Lowerer l(sig, opt);
  Proof out = l.lower(p, goal);
  if (auto v = check_proof_i(out, sig, opt.target))
    throw Error(ErrorCode::Internal, "lowered proof does not check: " + v->where() + ": " + v->message);
  return out;
}

int fallback_count(const Proof& p) { return count_notes(p); }

}  // namespace nacll
