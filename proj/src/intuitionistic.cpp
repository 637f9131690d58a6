// SPDX-License-Identifier: Apache-2.0
#include "nacll/intuitionistic.hpp"

#include <set>
#include <utility>

namespace nacll {

const char* system_name(IConfig cfg) {
  if (cfg.system == ISystem::ALL) return cfg.zero ? "int+zero" : "int";
  return cfg.zero ? "int-plus+zero" : "int-plus";
}

bool is_intuitionistic_rule(Rule r) { return !is_classical_rule(r); }

bool rule_in_system(Rule r, IConfig cfg) {
  if (!is_intuitionistic_rule(r)) return false;
  switch (r) {
    case Rule::A1M:
    case Rule::A1R:
    case Rule::A2L:
    case Rule::A2M: return cfg.system == ISystem::ALL_PLUS;
    case Rule::ZeroL: return cfg.zero;
    default: return true;
  }
}

namespace {

constexpr Rule kRules[] = {
    Rule::Id,     Rule::TopR,   Rule::OneR,    Rule::ZeroL,   Rule::TensorL, Rule::WithL1, Rule::WithL2,
    Rule::OplusL, Rule::OneL,   Rule::BangL,   Rule::ArrowL,  Rule::BackL,   Rule::TensorR, Rule::ArrowR,
    Rule::BackR,  Rule::WithR,  Rule::OplusR1, Rule::OplusR2, Rule::BangR,   Rule::BangW,  Rule::BangE,
    Rule::A1L,    Rule::A1M,    Rule::A1R,     Rule::A2L,     Rule::A2M,     Rule::A2R,
};

std::size_t arity_i(Rule r) {
  switch (r) {
    case Rule::Id:
    case Rule::TopR:
    case Rule::OneR:
    case Rule::ZeroL: return 0;
    case Rule::TensorR:
    case Rule::ArrowL:
    case Rule::BackL:
    case Rule::WithR:
    case Rule::OplusL: return 2;
    default: return 1;
  }
}

bool leaf_is(const Structure& s, Connective k) { return s.is_leaf() && s.formula().kind() == k; }

bool licensed(const Signature& sig, const Structure& s, Axiom a) {
  return !s.is_empty() && is_licensed_structure(sig, s, Connective::Bang, a);
}

Structure leaf(const Formula& f) { return Structure::leaf(f); }

class Gen {
 public:
  Gen(Rule rule, const Sequent& goal, const std::vector<Path>& at, const std::optional<std::string>& label,
      const Signature& sig)
      : rule_(rule), g_(goal.context), c_(*goal.goal), at_(at), label_(label), sig_(sig) {}

  std::vector<IInstance> run() {
    generate();
    return std::move(out_);
  }
  const std::string& problem() const { return problem_; }

 private:
  void fail(std::string m) {
    if (problem_.empty()) problem_ = std::move(m);
  }
  void add(std::vector<Path> at, std::vector<Sequent> premises, std::optional<std::string> label = {}) {
    out_.push_back({rule_, std::move(at), std::move(label), std::move(premises)});
  }
  Sequent seq(Structure s) const { return Sequent::intuitionistic(std::move(s), c_); }
  Sequent seq(Structure s, Formula f) const { return Sequent::intuitionistic(std::move(s), std::move(f)); }

  std::vector<Path> leaf_sites(Connective k) {
    std::vector<Path> out;
    if (!at_.empty()) {
      if (!valid_path(g_, at_[0]) || !leaf_is(at(g_, at_[0]), k)) {
        fail("expected a " + std::string(connective_symbol(k)) + " formula at \"" + at_[0].str() + "\"");
        return out;
      }
      out.push_back(at_[0]);
      return out;
    }
    if (!g_.is_empty())
      for (const auto& [p, f] : leaves(g_))
        if (f.kind() == k) out.push_back(p);
    if (out.empty()) fail("no " + std::string(connective_symbol(k)) + " formula in the antecedent");
    return out;
  }

  std::vector<Path> node_sites(bool pairs_only) {
    std::vector<Path> out;
    if (!at_.empty()) {
      if (!valid_path(g_, at_[0])) {
        fail("path \"" + at_[0].str() + "\" is not valid in the antecedent");
        return out;
      }
      out.push_back(at_[0]);
      return out;
    }
    if (g_.is_empty()) return out;
    for (const Path& p : node_paths(g_))
      if (!pairs_only || at(g_, p).is_pair()) out.push_back(p);
    return out;
  }

  bool goal_is(Connective k) {
    if (c_.kind() == k) return true;
    fail("succedent " + c_.text() + " is not a " + connective_symbol(k) + " formula");
    return false;
  }

  void generate() {
    switch (rule_) {
      case Rule::Id:
        if (c_.kind() == Connective::Atom && leaf_is(g_, Connective::Atom) && g_.formula() == c_) add({}, {});
        else fail("Id needs a |- a for an atom a");
        return;
      case Rule::TopR:
        if (goal_is(Connective::Top)) add({}, {});
        return;
      case Rule::OneR:
        if (g_.is_empty() && c_.kind() == Connective::One) add({}, {});
        else fail("OneR needs () |- 1");
        return;
      case Rule::ZeroL:
        for (const Path& p : leaf_sites(Connective::Zero)) add({p}, {});
        return;
      case Rule::TensorL:
        for (const Path& p : leaf_sites(Connective::Tensor)) {
          Formula f = at(g_, p).formula();
          add({p}, {seq(replace(g_, p, Structure::pair(leaf(f.lhs()), leaf(f.rhs()))))});
        }
        return;
      case Rule::WithL1:
      case Rule::WithL2:
        for (const Path& p : leaf_sites(Connective::With)) {
          Formula f = at(g_, p).formula();
          add({p}, {seq(replace(g_, p, leaf(rule_ == Rule::WithL1 ? f.lhs() : f.rhs())))});
        }
        return;
      case Rule::OplusL:
        for (const Path& p : leaf_sites(Connective::Plus)) {
          Formula f = at(g_, p).formula();
          add({p}, {seq(replace(g_, p, leaf(f.lhs()))), seq(replace(g_, p, leaf(f.rhs())))});
        }
        return;
      case Rule::OneL:
        for (const Path& p : leaf_sites(Connective::One)) add({p}, {seq(replace(g_, p, Structure::empty()))});
        return;
      case Rule::BangL:
        for (const Path& p : leaf_sites(Connective::Bang)) {
          Formula f = at(g_, p).formula();
          if (label_ && *label_ != f.label()) {
            fail("label " + *label_ + " does not match " + f.text());
            continue;
          }
          add({p}, {seq(replace(g_, p, leaf(f.body())))});
        }
        return;
      case Rule::ArrowL:
      case Rule::BackL: return implication_left();
      case Rule::TensorR:
        if (goal_is(Connective::Tensor)) {
          std::vector<std::pair<Structure, Structure>> splits;
          if (g_.is_pair()) splits.emplace_back(g_.left(), g_.right());
          splits.emplace_back(g_, Structure::empty());
          if (!g_.is_empty()) splits.emplace_back(Structure::empty(), g_);
          for (const auto& [x, y] : splits) add({}, {seq(x, c_.lhs()), seq(y, c_.rhs())});
        }
        return;
      case Rule::ArrowR:
        if (goal_is(Connective::ImplR)) add({}, {seq(Structure::pair(leaf(c_.lhs()), g_), c_.rhs())});
        return;
      case Rule::BackR:
        // B <- A: lhs is B, rhs is A.
        if (goal_is(Connective::ImplL)) add({}, {seq(Structure::pair(g_, leaf(c_.rhs())), c_.lhs())});
        return;
      case Rule::WithR:
        if (goal_is(Connective::With)) add({}, {seq(g_, c_.lhs()), seq(g_, c_.rhs())});
        return;
      case Rule::OplusR1:
      case Rule::OplusR2:
        if (goal_is(Connective::Plus)) add({}, {seq(g_, rule_ == Rule::OplusR1 ? c_.lhs() : c_.rhs())});
        return;
      case Rule::BangR: return promotion();
      case Rule::BangW:
        for (const Path& p : node_sites(false)) {
          if (licensed(sig_, at(g_, p), Axiom::W)) add({p}, {seq(replace(g_, p, Structure::empty()))});
          else if (!at_.empty()) fail(at(g_, p).text() + " is not a !-structure licensing W");
        }
        return;
      case Rule::BangE:
        for (const Path& p : node_sites(true)) {
          Structure n = at(g_, p);
          if (!n.is_pair()) {
            fail("BangE needs a pair");
            continue;
          }
          if (licensed(sig_, n.left(), Axiom::E) || licensed(sig_, n.right(), Axiom::E))
            add({p}, {seq(replace(g_, p, Structure::pair(n.right(), n.left())))});
          else if (!at_.empty())
            fail("neither side of " + n.text() + " is a !-structure licensing E");
        }
        return;
      case Rule::A1L:
      case Rule::A1M:
      case Rule::A1R:
      case Rule::A2L:
      case Rule::A2M:
      case Rule::A2R: return associativity();
      default: fail("not an intuitionistic rule"); return;
    }
  }

  void implication_left() {
    bool arrow = rule_ == Rule::ArrowL;
    Connective k = arrow ? Connective::ImplR : Connective::ImplL;
    for (const Path& p : leaf_sites(k)) {
      Formula f = at(g_, p).formula();
      Formula a = arrow ? f.lhs() : f.rhs();
      Formula b = arrow ? f.rhs() : f.lhs();
      // The argument structure may be empty.
      add({p}, {seq(Structure::empty(), a), seq(replace(g_, p, leaf(b)))});
      // A -> B takes its argument from the left, B <- A from the right.
      if (p.empty() || p.steps.back() != (arrow ? Dir::R : Dir::L)) continue;
      Path parent(std::vector<Dir>(p.steps.begin(), p.steps.end() - 1));
      Structure node = at(g_, parent);
      Structure delta = arrow ? node.left() : node.right();
      add({p}, {seq(delta, a), seq(replace(g_, parent, leaf(b)))});
    }
  }

  void promotion() {
    if (!goal_is(Connective::Bang)) return;
    if (label_ && *label_ != c_.label()) {
      fail("label " + *label_ + " does not match " + c_.text());
      return;
    }
    UpsetResult up = upset_restrict(sig_, g_, c_.label(), Connective::Bang);
    if (up.status == UpsetResult::Status::NotApplicable) {
      fail("antecedent " + g_.text() + " has a leaf that is not a !-formula");
      return;
    }
    if (up.status == UpsetResult::Status::Undefined) {
      fail("promotion undefined: " + g_.text() + " has no upset restriction to " + c_.label());
      return;
    }
    add({}, {seq(up.restricted, c_.body())});
  }

  void associativity() {
    Axiom axiom = (rule_ == Rule::A1L || rule_ == Rule::A1M || rule_ == Rule::A1R) ? Axiom::A1 : Axiom::A2;
    for (const Path& p : node_sites(true)) {
      Structure n = at(g_, p);
      // Conclusion shape ((X, Y), Z) rewritten to (X, (Y, Z)) or the reverse.
      bool left_nested = rule_ == Rule::A1L || rule_ == Rule::A1R || rule_ == Rule::A2M;
      if (left_nested ? !(n.is_pair() && n.left().is_pair()) : !(n.is_pair() && n.right().is_pair())) {
        if (!at_.empty()) fail(n.text() + " has the wrong shape");
        continue;
      }
      Structure x = left_nested ? n.left().left() : n.left();
      Structure y = left_nested ? n.left().right() : n.right().left();
      Structure z = left_nested ? n.right() : n.right().right();
      const Structure& marked = (rule_ == Rule::A1L || rule_ == Rule::A2L)   ? x
                                : (rule_ == Rule::A1M || rule_ == Rule::A2M) ? y
                                                                             : z;
      if (!licensed(sig_, marked, axiom)) {
        if (!at_.empty())
          fail(marked.text() + " is not a !-structure licensing " + std::string(axiom_name(axiom)));
        continue;
      }
      Structure rebuilt = left_nested ? Structure::pair(x, Structure::pair(y, z))
                                      : Structure::pair(Structure::pair(x, y), z);
      add({p}, {seq(replace(g_, p, rebuilt))});
    }
  }

  Rule rule_;
  Structure g_;
  Formula c_;
  const std::vector<Path>& at_;
  const std::optional<std::string>& label_;
  const Signature& sig_;
  std::vector<IInstance> out_;
  std::string problem_;
};

std::optional<std::string> check_contraction(const Sequent& conclusion, const std::vector<Path>& at,
                                             const Sequent& premise, const Signature& sig) {
  const Structure& p = premise.context;
  if (premise.goal != conclusion.goal) return "succedents differ";
  if (at.size() < 2) return "BangC records every copy's path in the premise (at least two)";
  for (const Path& a : at)
    if (!valid_path(p, a)) return "path \"" + a.str() + "\" is not valid in the premise";
  for (std::size_t i = 0; i < at.size(); ++i)
    for (std::size_t j = 0; j < at.size(); ++j)
      if (i != j && at[i].is_prefix_of(at[j])) return "copy paths overlap";
  Structure q = nacll::at(p, at[0]);
  for (const Path& a : at)
    if (nacll::at(p, a) != q) return "copies differ: " + q.text() + " vs " + nacll::at(p, a).text();
  if (!licensed(sig, q, Axiom::C)) return q.text() + " is not a !-structure licensing C";
  for (std::size_t keep = 0; keep < at.size(); ++keep) {
    std::vector<std::pair<Path, Structure>> edits;
    for (std::size_t i = 0; i < at.size(); ++i)
      if (i != keep) edits.emplace_back(at[i], Structure::empty());
    if (replace_many(p, edits) == conclusion.context) return std::nullopt;
  }
  return "shape mismatch: removing the extra copies from " + premise.text() + " does not give " + conclusion.text();
}

}  // namespace

std::vector<IInstance> instances_i(Rule rule, const Sequent& goal, const std::vector<Path>& at,
                                   const std::optional<std::string>& label, const Signature& sig, IConfig cfg,
                                   std::string* why) {
  if (!rule_in_system(rule, cfg)) {
    if (why) *why = std::string("system mismatch: ") + rule_name(rule) + " is not a rule of " + system_name(cfg);
    return {};
  }
  Gen g(rule, goal, at, label, sig);
  auto out = g.run();
  if (why) *why = g.problem();
  return out;
}

std::vector<IInstance> contraction_instances(const Sequent& goal, const Signature& sig) {
  std::vector<IInstance> out;
  const Structure& g = goal.context;
  if (g.is_empty()) return out;
  std::set<std::string> seen;
  for (const Path& q : node_paths(g)) {
    if (!licensed(sig, at(g, q), Axiom::C)) continue;
    for (auto& d : duplications(g, q)) {
      if (!seen.insert(d.result.text()).second) continue;
      out.push_back({Rule::BangC, std::move(d.copies), std::nullopt, {Sequent::intuitionistic(d.result, *goal.goal)}});
    }
  }
  return out;
}

std::vector<IInstance> all_instances_i(const Sequent& goal, const Signature& sig, IConfig cfg) {
  std::vector<IInstance> out;
  static const std::vector<Path> none;
  static const std::optional<std::string> no_label;
  for (Rule r : kRules) {
    if (!rule_in_system(r, cfg)) continue;
    auto inst = instances_i(r, goal, none, no_label, sig, cfg);
    for (auto& i : inst) out.push_back(std::move(i));
  }
  return out;
}

std::optional<std::string> check_step_i(Rule rule, const Sequent& conclusion, const std::vector<Path>& at,
                                        const std::optional<std::string>& label,
                                        const std::vector<Sequent>& premises, const Signature& sig, IConfig cfg) {
  std::string name = rule_name(rule);
  auto err = [&](const std::string& m) { return std::optional<std::string>(name + ": " + m); };
  if (!is_intuitionistic_rule(rule)) return err("not an intuitionistic rule");
  if (!rule_in_system(rule, cfg)) return err(std::string("system mismatch: not a rule of ") + system_name(cfg));
  if (!conclusion.is_intuitionistic()) return err("conclusion is not a two-sided sequent");
  std::size_t want = rule == Rule::BangC ? 1 : arity_i(rule);
  if (premises.size() != want)
    return err("expects " + std::to_string(want) + " premise(s), got " + std::to_string(premises.size()));
  for (const auto& p : premises)
    if (!p.is_intuitionistic()) return err("premise " + p.text() + " is not a two-sided sequent");
  if (rule == Rule::BangC) {
    auto why = check_contraction(conclusion, at, premises[0], sig);
    return why ? err(*why) : std::nullopt;
  }
  std::string why;
  auto inst = instances_i(rule, conclusion, at, label, sig, cfg, &why);
  std::string mismatch;
  for (const auto& i : inst) {
    bool ok = true;
    for (std::size_t k = 0; k < premises.size() && ok; ++k) {
      if (i.premises[k] == premises[k]) continue;
      ok = false;
      if (mismatch.empty())
        mismatch = "shape mismatch: premise " + std::to_string(k + 1) + " should be " + i.premises[k].text() +
                   " but is " + premises[k].text();
    }
    if (ok) return std::nullopt;
  }
  if (!why.empty() && inst.empty()) return err(why);
  return err(!mismatch.empty() ? mismatch : "rule does not apply");
}

namespace {

std::optional<Violation> check_rec_i(const Proof& p, const Signature& sig, IConfig cfg,
                                     std::vector<std::size_t>& loc) {
  std::vector<Sequent> prem;
  for (const auto& q : p.premises) prem.push_back(q.conclusion);
  if (auto e = check_step_i(p.rule, p.conclusion, p.at, p.label, prem, sig, cfg)) return Violation{*e, loc};
  for (std::size_t i = 0; i < p.premises.size(); ++i) {
    loc.push_back(i);
    if (auto v = check_rec_i(p.premises[i], sig, cfg, loc)) return v;
    loc.pop_back();
  }
  return std::nullopt;
}

}  // namespace

std::optional<Violation> check_proof_i(const Proof& p, const Signature& sig, IConfig cfg) {
  std::vector<std::size_t> loc;
  return check_rec_i(p, sig, cfg, loc);
}

}  // namespace nacll
