// SPDX-License-Identifier: Apache-2.0
#include "nacll/classical.hpp"

#include <set>
#include <utility>

#include "nacll/equivalence.hpp"

namespace nacll {

std::string Violation::where() const {
  std::string out = "root";
  for (std::size_t i : location) out += "/" + std::to_string(i);
  return out;
}

namespace {

std::string show_path(const Path& p) { return "\"" + p.str() + "\""; }
std::string show(const Structure& s) { return "|- " + s.text(); }

bool leaf_is(const Structure& s, Connective k) { return s.is_leaf() && s.formula().kind() == k; }

std::size_t arity(Rule r) {
  switch (r) {
    case Rule::Init:
    case Rule::OneAx:
    case Rule::TopAx:
      return 0;
    case Rule::Tensor:
    case Rule::Cut:
    case Rule::With:
      return 2;
    default:
      return 1;
  }
}

/// First leaf of `q` that is not a `?`-formula licensing `axiom`, as a
/// message; empty if `q` is a licensed ?-structure. `shape_ok` is cleared
/// when some leaf is not a ?-formula at all.
std::string license_problem(const Signature& sig, const Structure& q, Axiom axiom, bool& shape_ok) {
  shape_ok = true;
  for (const auto& [p, f] : leaves(q)) {
    if (f.kind() != Connective::Quest) {
      shape_ok = false;
      return "leaf " + f.text() + " is not a ?-formula";
    }
  }
  for (const auto& [p, f] : leaves(q))
    if (!sig.licenses(f.label(), axiom))
      return std::string("unlicensed subexponential axiom: label ") + f.label() + " lacks " + axiom_name(axiom);
  return {};
}

class Matcher {
 public:
  Matcher(Rule rule, const Structure& c, const std::vector<Path>& at, const std::optional<std::string>& label,
          const std::vector<Structure>& prem, const Signature& sig, Mode mode)
      : rule_(rule), c_(c), at_(at), label_(label), prem_(prem), sig_(sig), mode_(mode) {}

  std::vector<StepInstance> candidates() {
    generate();
    return std::move(cands_);
  }

  StepResult run() {
    generate();
    std::string mismatch;
    for (auto& cand : cands_) {
      if (!same(cand.conclusion, c_)) {
        if (mismatch.empty())
          mismatch = "shape mismatch: conclusion " + show(c_) + " does not match " + show(cand.conclusion);
        continue;
      }
      bool ok = true;
      for (std::size_t i = 0; i < cand.premises.size() && ok; ++i) {
        if (!same(cand.premises[i], prem_[i])) {
          ok = false;
          if (mismatch.empty())
            mismatch = "shape mismatch: premise " + std::to_string(i + 1) + " should be " +
                       show(cand.premises[i]) + " but is " + show(prem_[i]) + " (designated conclusion " +
                       show(cand.conclusion) + ")";
        }
      }
      if (ok) return {std::move(cand), {}};
    }
    std::string msg = !problem_.empty() ? problem_ : !mismatch.empty() ? mismatch : "rule does not apply";
    return {std::nullopt, std::string(rule_name(rule_)) + ": " + msg};
  }

 private:
  bool same(const Structure& a, const Structure& b) const {
    return mode_ == Mode::Strict ? a == b : equivalent(a, b);
  }
  void fail(std::string m) {
    if (problem_.empty()) problem_ = std::move(m);
  }
  void add(Structure conclusion, std::vector<Path> at, std::vector<Structure> premises) {
    std::vector<Path> source = at;
    cands_.push_back({std::move(conclusion), std::move(at), std::move(premises), std::move(source)});
  }
  void add_rot(Structure whole, std::vector<Structure> premises) {
    std::vector<Path> source;
    if (cur_source_) source.push_back(*cur_source_);
    std::vector<Path> at = top_at(whole);
    cands_.push_back({std::move(whole), std::move(at), std::move(premises), std::move(source)});
  }
  static std::vector<Path> top_at(const Structure& whole) {
    return {whole.is_pair() ? Path::parse("R") : Path()};
  }

  bool check_path(const Structure& s, const Path& p) {
    if (valid_path(s, p)) return true;
    fail("path " + show_path(p) + " is not valid in " + s.text());
    return false;
  }

  /// Leaves of kind `k`, or just the recorded one.
  std::vector<Path> leaf_sites(Connective k) {
    std::vector<Path> out;
    if (!at_.empty()) {
      if (!check_path(c_, at_[0])) return out;
      if (!leaf_is(at(c_, at_[0]), k)) {
        fail("expected a " + std::string(connective_symbol(k)) + " formula at " + show_path(at_[0]) + ", found " +
             at(c_, at_[0]).text());
        return out;
      }
      out.push_back(at_[0]);
      return out;
    }
    for (const auto& [p, f] : leaves(c_))
      if (f.kind() == k) out.push_back(p);
    if (out.empty()) fail("no " + std::string(connective_symbol(k)) + " formula in the conclusion");
    return out;
  }

  /// Ways of putting a principal subtree at the top right. Strict mode only
  /// allows the literal right child (or the whole conclusion if it is a leaf).
  struct Site {
    Rotation r;
    bool exact;  // the principal is the subtree at r.source
  };

  std::vector<Site> top_sites(bool leaf_only) {
    std::vector<Site> out;
    if (mode_ == Mode::Strict) {
      Path want = top_at(c_)[0];
      if (!at_.empty() && at_[0] != want) {
        fail("strict mode expects the principal at " + show_path(want));
        return out;
      }
      out.push_back({rotate(c_, want), true});
      return out;
    }
    if (!at_.empty()) {
      if (check_path(c_, at_[0])) out.push_back({rotate(c_, at_[0]), true});
      return out;
    }
    if (leaf_only) {
      for (auto& r : rotations(c_)) out.push_back({std::move(r), true});
      return out;
    }
    std::set<std::string> seen;
    auto push = [&](Rotation r, bool exact) {
      if (seen.insert(r.rest.text() + "|" + r.principal.text()).second) out.push_back({std::move(r), exact});
    };
    for (auto& r : subtree_rotations(c_)) {
      if (r.rest.is_empty()) continue;
      push(Rotation{r.source, r.principal, r.rest}, false);
      push(std::move(r), true);
    }
    return out;
  }

  void generate() {
    switch (rule_) {
      case Rule::Init: return init();
      case Rule::OneAx:
        if (leaf_is(c_, Connective::One)) add(c_, {}, {});
        else fail("OneAx needs the conclusion |- 1");
        return;
      case Rule::TopAx:
        for (const Path& p : leaf_sites(Connective::Top)) add(c_, {p}, {});
        return;
      case Rule::Par:
        for (const Path& p : leaf_sites(Connective::Par)) {
          Formula f = at(c_, p).formula();
          add(c_, {p}, {replace(c_, p, Structure::pair(Structure::leaf(f.lhs()), Structure::leaf(f.rhs())))});
        }
        return;
      case Rule::PlusL:
      case Rule::PlusR:
        for (const Path& p : leaf_sites(Connective::Plus)) {
          Formula f = at(c_, p).formula();
          add(c_, {p}, {replace(c_, p, Structure::leaf(rule_ == Rule::PlusL ? f.lhs() : f.rhs()))});
        }
        return;
      case Rule::With:
        for (const Path& p : leaf_sites(Connective::With)) {
          Formula f = at(c_, p).formula();
          add(c_, {p}, {replace(c_, p, Structure::leaf(f.lhs())), replace(c_, p, Structure::leaf(f.rhs()))});
        }
        return;
      case Rule::BotIntro:
        for (const Path& p : leaf_sites(Connective::Bot)) {
          Structure r = replace(c_, p, Structure::empty());
          if (r.is_empty()) fail("removing bot would leave an empty sequent");
          else add(c_, {p}, {r});
        }
        return;
      case Rule::Der:
        for (const Path& p : leaf_sites(Connective::Quest)) {
          Formula f = at(c_, p).formula();
          if (label_ && *label_ != f.label()) {
            fail("label " + *label_ + " does not match " + f.text());
            continue;
          }
          add(c_, {p}, {replace(c_, p, Structure::leaf(f.body()))});
        }
        return;
      case Rule::Tensor: return tensor();
      case Rule::Prom: return prom();
      case Rule::QE:
      case Rule::QA1:
      case Rule::QA2: return reassoc();
      case Rule::QW: return weaken();
      case Rule::QC: return contract();
      case Rule::Cut: return cut();
      case Rule::E:
      case Rule::A1:
      case Rule::A2: return structural();
      default: fail("not a classical rule"); return;
    }
  }

  void init() {
    if (c_.is_pair() && c_.left().is_leaf() && c_.right().is_leaf()) {
      Formula a = c_.left().formula(), b = c_.right().formula();
      bool atoms = (a.kind() == Connective::Atom && b.kind() == Connective::NegAtom) ||
                   (a.kind() == Connective::NegAtom && b.kind() == Connective::Atom);
      if (atoms && a.name() == b.name()) {
        add(c_, {}, {});
        return;
      }
    }
    fail("Init needs |- (A, A^) for an atom A, got " + show(c_));
  }

  void tensor() {
    for (const Site& site : top_sites(true)) {
      const Rotation& r = site.r;
      cur_source_ = site.exact ? std::optional<Path>(r.source) : std::nullopt;
      if (!leaf_is(r.principal, Connective::Tensor)) {
        if (!at_.empty() || mode_ == Mode::Strict)
          fail("expected a * formula at the principal position, found " + r.principal.text());
        continue;
      }
      Formula f = r.principal.formula();
      Structure whole = r.whole();
      std::vector<std::pair<Structure, Structure>> splits;
      if (r.rest.is_pair()) splits.emplace_back(r.rest.left(), r.rest.right());
      splits.emplace_back(r.rest, Structure::empty());
      if (!r.rest.is_empty()) splits.emplace_back(Structure::empty(), r.rest);
      for (const auto& [g, d] : splits)
        add_rot(whole,
                {Structure::pair(g, Structure::leaf(f.rhs())), Structure::pair(d, Structure::leaf(f.lhs()))});
    }
  }

  void prom() {
    for (const Site& site : top_sites(true)) {
      const Rotation& r = site.r;
      cur_source_ = site.exact ? std::optional<Path>(r.source) : std::nullopt;
      if (!leaf_is(r.principal, Connective::Bang)) {
        if (!at_.empty() || mode_ == Mode::Strict)
          fail("expected a ! formula at the principal position, found " + r.principal.text());
        continue;
      }
      Formula f = r.principal.formula();
      if (label_ && *label_ != f.label()) {
        fail("label " + *label_ + " does not match " + f.text());
        continue;
      }
      UpsetResult up = upset_restrict(sig_, r.rest, f.label());
      if (up.status == UpsetResult::Status::NotApplicable) {
        fail("context " + r.rest.text() + " has a leaf that is not a ?-formula");
        continue;
      }
      if (up.status == UpsetResult::Status::Undefined) {
        fail("promotion undefined: " + r.rest.text() + " has no upset restriction to " + f.label());
        continue;
      }
      Structure whole = r.whole();
      add_rot(whole, {Structure::pair(up.restricted, Structure::leaf(f.body()))});
    }
  }

  void reassoc() {
    Axiom axiom = rule_ == Rule::QE ? Axiom::E : rule_ == Rule::QA1 ? Axiom::A1 : Axiom::A2;
    for (const Site& site : top_sites(false)) {
      const Rotation& r = site.r;
      cur_source_ = site.exact ? std::optional<Path>(r.source) : std::nullopt;
      const Structure& q = r.principal;
      const Structure& d = r.rest;
      Structure premise_rest;
      if (rule_ == Rule::QE && d.is_pair()) {
        premise_rest = Structure::pair(d.right(), d.left());
      } else if (rule_ == Rule::QA1 && d.is_pair() && d.left().is_pair()) {
        // ((D1, D2), D3) from (D1, (D2, D3))
        premise_rest = Structure::pair(d.left().left(), Structure::pair(d.left().right(), d.right()));
      } else if (rule_ == Rule::QA2 && d.is_pair() && d.right().is_pair()) {
        // (D1, (D2, D3)) from ((D1, D2), D3)
        premise_rest = Structure::pair(Structure::pair(d.left(), d.right().left()), d.right().right());
      } else {
        if (!at_.empty() || mode_ == Mode::Strict) fail("context " + d.text() + " has the wrong shape");
        continue;
      }
      bool shape_ok = true;
      std::string lic = license_problem(sig_, q, axiom, shape_ok);
      if (!lic.empty()) {
        if (shape_ok || !at_.empty() || mode_ == Mode::Strict) fail(lic);
        continue;
      }
      Structure whole = r.whole();
      add_rot(whole, {Structure::pair(premise_rest, q)});
    }
  }

  void weaken() {
    std::vector<Rotation> sites;
    if (mode_ == Mode::Strict) {
      // Deep: the erased structure may sit anywhere.
      std::vector<Path> paths;
      if (!at_.empty()) {
        if (check_path(c_, at_[0])) paths.push_back(at_[0]);
      } else {
        for (const Path& p : node_paths(c_))
          if (!p.empty()) paths.push_back(p);
      }
      for (const Path& p : paths) {
        Structure q = at(c_, p);
        bool shape_ok = true;
        std::string lic = license_problem(sig_, q, Axiom::W, shape_ok);
        if (!lic.empty()) {
          if (shape_ok || !at_.empty()) fail(lic);
          continue;
        }
        Structure r = replace(c_, p, Structure::empty());
        if (r.is_empty()) fail("weakening would leave an empty sequent");
        else add(c_, {p}, {r});
      }
      return;
    }
    for (const Site& site : top_sites(false)) {
      const Rotation& r = site.r;
      cur_source_ = site.exact ? std::optional<Path>(r.source) : std::nullopt;
      bool shape_ok = true;
      std::string lic = license_problem(sig_, r.principal, Axiom::W, shape_ok);
      if (!lic.empty()) {
        if (shape_ok || !at_.empty()) fail(lic);
        continue;
      }
      if (r.rest.is_empty()) {
        fail("weakening would leave an empty sequent");
        continue;
      }
      Structure whole = r.whole();
      add_rot(whole, {r.rest});
    }
  }

  void contract() {
    const Structure& p = prem_[0];
    if (at_.size() < 2) {
      fail("QC records every copy's path in the premise (at least two)");
      return;
    }
    for (const Path& a : at_)
      if (!check_path(p, a)) return;
    for (std::size_t i = 0; i < at_.size(); ++i)
      for (std::size_t j = 0; j < at_.size(); ++j)
        if (i != j && at_[i].is_prefix_of(at_[j])) {
          fail("copy paths " + show_path(at_[i]) + " and " + show_path(at_[j]) + " overlap");
          return;
        }
    Structure q = at(p, at_[0]);
    for (const Path& a : at_)
      if (at(p, a) != q) {
        fail("copies differ: " + q.text() + " vs " + at(p, a).text());
        return;
      }
    bool shape_ok = true;
    std::string lic = license_problem(sig_, q, Axiom::C, shape_ok);
    if (!lic.empty()) {
      fail(lic);
      return;
    }
    for (std::size_t keep = 0; keep < at_.size(); ++keep) {
      std::vector<std::pair<Path, Structure>> edits;
      for (std::size_t i = 0; i < at_.size(); ++i)
        if (i != keep) edits.emplace_back(at_[i], Structure::empty());
      add(replace_many(p, edits), at_, {p});
    }
  }

  void cut() {
    const Structure& p1 = prem_[0];
    const Structure& p2 = prem_[1];
    if (mode_ == Mode::Strict) {
      Structure g, a, d, na;
      if (p1.is_leaf()) a = p1;
      else if (p1.is_pair() && p1.right().is_leaf()) g = p1.left(), a = p1.right();
      if (p2.is_leaf()) na = p2;
      else if (p2.is_pair() && p2.left().is_leaf()) na = p2.left(), d = p2.right();
      if (a.is_empty() || na.is_empty()) {
        fail("premises must have the shapes (G, A) and (A^, D)");
        return;
      }
      if (negate(a.formula()) != na.formula()) {
        fail("cut formulas " + a.text() + " and " + na.text() + " are not dual");
        return;
      }
      add(Structure::pair(g, d), {}, {p1, p2});
      return;
    }
    std::set<std::string> seen;
    for (const Rotation& r1 : rotations(p1)) {
      Formula a = r1.principal.formula();
      if (a.kind() == Connective::ImplR || a.kind() == Connective::ImplL) continue;
      Formula na = negate(a);
      for (const Rotation& r2 : rotations(p2)) {
        if (r2.principal.formula() != na) continue;
        Structure conc = Structure::pair(r1.rest, r2.rest);
        if (conc.is_empty() || !seen.insert(conc.text() + "|" + a.text()).second) continue;
        add(conc, {}, {Structure::pair(r1.rest, r1.principal), Structure::pair(r2.principal, r2.rest)});
      }
    }
    if (cands_.empty()) fail("premises share no dual pair of formulas");
  }

  void structural() {
    if (mode_ != Mode::Strict) {
      fail("structural rules are only legal in strict mode");
      return;
    }
    const Structure& c = c_;
    if (rule_ == Rule::E && c.is_pair()) {
      add(c, {}, {Structure::pair(c.right(), c.left())});
    } else if (rule_ == Rule::A1 && c.is_pair() && c.left().is_pair()) {
      add(c, {}, {Structure::pair(c.left().left(), Structure::pair(c.left().right(), c.right()))});
    } else if (rule_ == Rule::A2 && c.is_pair() && c.right().is_pair()) {
      add(c, {}, {Structure::pair(Structure::pair(c.left(), c.right().left()), c.right().right())});
    } else {
      fail("conclusion " + show(c) + " has the wrong shape");
    }
  }

  Rule rule_;
  const Structure& c_;
  const std::vector<Path>& at_;
  const std::optional<std::string>& label_;
  const std::vector<Structure>& prem_;
  const Signature& sig_;
  Mode mode_;
  std::vector<StepInstance> cands_;
  std::string problem_;
  std::optional<Path> cur_source_;
};

}  // namespace

StepResult check_step(Rule rule, const Sequent& conclusion, const std::vector<Path>& at,
                      const std::optional<std::string>& label, const std::vector<Sequent>& premises,
                      const Signature& sig, Mode mode) {
  std::string name = rule_name(rule);
  if (!is_classical_rule(rule)) return {std::nullopt, name + ": not a classical rule"};
  if (premises.size() != arity(rule))
    return {std::nullopt, name + ": expects " + std::to_string(arity(rule)) + " premise(s), got " +
                              std::to_string(premises.size())};
  if (conclusion.is_intuitionistic() || conclusion.context.is_empty())
    return {std::nullopt, name + ": conclusion is not a non-empty one-sided sequent"};
  std::vector<Structure> prem;
  for (const auto& s : premises) {
    if (s.is_intuitionistic() || s.context.is_empty())
      return {std::nullopt, name + ": premise " + s.text() + " is not a non-empty one-sided sequent"};
    prem.push_back(s.context);
  }
  if (rule != Rule::QC)
    for (const Path& p : at)
      if (!valid_path(conclusion.context, p))
        return {std::nullopt, name + ": path \"" + p.str() + "\" is not valid in the conclusion"};
  return Matcher(rule, conclusion.context, at, label, prem, sig, mode).run();
}

std::vector<StepInstance> backward_instances(Rule rule, const Structure& conclusion, const Signature& sig) {
  static const std::vector<Path> no_at;
  static const std::optional<std::string> no_label;
  static const std::vector<Structure> no_premises;
  if (rule == Rule::Cut || rule == Rule::QC || rule == Rule::E || rule == Rule::A1 || rule == Rule::A2) return {};
  return Matcher(rule, conclusion, no_at, no_label, no_premises, sig, Mode::Modulo).candidates();
}

namespace {

std::optional<Violation> check_rec(const Proof& p, const Signature& sig, Mode mode, std::vector<std::size_t>& loc) {
  std::vector<Sequent> prem;
  for (const auto& q : p.premises) prem.push_back(q.conclusion);
  StepResult r = check_step(p.rule, p.conclusion, p.at, p.label, prem, sig, mode);
  if (!r.ok()) return Violation{r.error, loc};
  for (std::size_t i = 0; i < p.premises.size(); ++i) {
    loc.push_back(i);
    if (auto v = check_rec(p.premises[i], sig, mode, loc)) return v;
    loc.pop_back();
  }
  return std::nullopt;
}

Rule to_rule(StructuralRule r) {
  switch (r) {
    case StructuralRule::E: return Rule::E;
    case StructuralRule::A1: return Rule::A1;
    case StructuralRule::A2: return Rule::A2;
  }
  return Rule::E;
}

/// A strict proof of `from` ending in `target` (whose conclusion is ~ `from`).
Proof bridge(const Structure& from, Proof target) {
  if (from == target.conclusion.context) return target;
  std::vector<StructuralStep> steps = structural_bridge(from, target.conclusion.context);
  Proof cur = std::move(target);
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    Proof n;
    n.rule = to_rule(it->rule);
    n.conclusion = Sequent::classical(it->conclusion);
    n.premises.push_back(std::move(cur));
    cur = std::move(n);
  }
  return cur;
}

}  // namespace

std::optional<Violation> check_proof(const Proof& p, const Signature& sig, Mode mode) {
  std::vector<std::size_t> loc;
  return check_rec(p, sig, mode, loc);
}

Proof expand_to_strict(const Proof& p, const Signature& sig) {
  std::vector<Sequent> prem;
  for (const auto& q : p.premises) prem.push_back(q.conclusion);
  StepResult r = check_step(p.rule, p.conclusion, p.at, p.label, prem, sig, Mode::Modulo);
  if (!r.ok()) throw Error(ErrorCode::NotApplicable, "expand: " + r.error);
  StepInstance& inst = *r.instance;
  Proof core;
  core.rule = p.rule;
  core.conclusion = Sequent::classical(inst.conclusion);
  core.at = inst.at;
  core.label = p.label;
  core.note = p.note;
  for (std::size_t i = 0; i < p.premises.size(); ++i)
    core.premises.push_back(bridge(inst.premises[i], expand_to_strict(p.premises[i], sig)));
  return bridge(p.conclusion.context, std::move(core));
}

Proof erase_structural(const Proof& p) {
  if (p.rule == Rule::E || p.rule == Rule::A1 || p.rule == Rule::A2) return erase_structural(p.premises.at(0));
  Proof out = p;
  out.premises.clear();
  for (const auto& q : p.premises) out.premises.push_back(erase_structural(q));
  return out;
}

}  // namespace nacll
