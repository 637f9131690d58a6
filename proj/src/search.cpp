// SPDX-License-Identifier: Apache-2.0
#include "nacll/search.hpp"

#include <deque>
#include <functional>
#include <set>
#include <unordered_map>
#include <utility>

#include "nacll/classical.hpp"
#include "nacll/equivalence.hpp"

namespace nacll {

const char* status_name(SearchOutcome::Status s) {
  switch (s) {
    case SearchOutcome::Status::Proved: return "Proved";
    case SearchOutcome::Status::Exhausted: return "Exhausted";
    case SearchOutcome::Status::BudgetExceeded: return "BudgetExceeded";
  }
  return "?";
}

namespace {

struct Alt {
  Rule rule;
  std::vector<Path> at;
  std::optional<std::string> label;
  std::vector<Sequent> premises;
  bool contraction = false;
};

using Expand = std::function<std::vector<Alt>(const Sequent&, bool allow_contraction)>;
using Key = std::function<std::string(const Sequent&)>;

// AND-OR graph explored breadth first. A state is proved once some
// alternative has all its children proved; that order makes the recorded
// justifications acyclic even though the graph itself may have cycles.
class Engine {
 public:
  Engine(Expand expand, Key key, const Budget& budget)
      : expand_(std::move(expand)), key_(std::move(key)), budget_(budget) {}

  SearchOutcome run(const Sequent& goal) {
    bool fresh = false;
    int root = intern(goal, budget_.max_contractions, 0, fresh);
    queue_.push_back(root);
    while (!queue_.empty() && !nodes_[root].proved) {
      int n = queue_.front();
      queue_.pop_front();
      if (nodes_[n].proved || nodes_[n].depth >= budget_.max_depth) continue;
      expand_node(n);
    }
    SearchOutcome out;
    out.visited = nodes_.size();
    for (const auto& n : nodes_)
      if (!n.proved && (!n.expanded || n.partial)) ++out.truncated;
    if (nodes_[root].proved) {
      out.status = SearchOutcome::Status::Proved;
      out.proof = extract(root);
      out.report = "proved (" + std::to_string(out.visited) + " states)";
    } else if (!possibly_provable(root)) {
      out.status = SearchOutcome::Status::Exhausted;
      out.report = "no cut-free proof with at most " + std::to_string(budget_.max_contractions) +
                   " contraction(s) per branch (" + std::to_string(out.visited) + " states explored)";
    } else {
      out.status = SearchOutcome::Status::BudgetExceeded;
      out.report = "budget exceeded: depth " + std::to_string(budget_.max_depth) + ", " +
                   std::to_string(out.visited) + " states, " + std::to_string(out.truncated) + " left unexpanded" +
                   (capped_ ? " (state cap reached)" : "");
    }
    return out;
  }

 private:
  struct AltRec {
    Alt alt;
    std::vector<int> children;  // aligned with alt.premises
    int remaining = 0;          // distinct children not yet proved
  };
  struct Node {
    Sequent seq;
    int contractions;
    int depth;
    bool expanded = false;
    bool partial = false;  // some alternatives dropped at the state cap
    bool proved = false;
    int just = -1;
    std::vector<AltRec> alts;
    std::vector<std::pair<int, int>> parents;  // (node, alternative)
  };

  int intern(const Sequent& s, int k, int depth, bool& fresh) {
    std::string key = key_(s) + "#" + std::to_string(k);
    auto it = index_.find(key);
    fresh = it == index_.end();
    if (!fresh) return it->second;
    int id = static_cast<int>(nodes_.size());
    nodes_.push_back(Node{s, k, depth, false, false, false, -1, {}, {}});
    index_.emplace(std::move(key), id);
    return id;
  }

  void expand_node(int n) {
    std::vector<Alt> alts = expand_(nodes_[n].seq, nodes_[n].contractions > 0);
    nodes_[n].expanded = true;
    for (auto& alt : alts) {
      int k = nodes_[n].contractions - (alt.contraction ? 1 : 0);
      int depth = nodes_[n].depth + 1;
      std::vector<int> children;
      bool dropped = false;
      for (const auto& prem : alt.premises) {
        if (nodes_.size() >= budget_.max_visited) {
          // Only reuse existing states once the cap is hit.
          auto it = index_.find(key_(prem) + "#" + std::to_string(k));
          if (it == index_.end()) {
            dropped = true;
            break;
          }
          children.push_back(it->second);
          continue;
        }
        bool fresh = false;
        int c = intern(prem, k, depth, fresh);
        if (fresh) queue_.push_back(c);
        children.push_back(c);
      }
      if (dropped) {
        capped_ = true;
        nodes_[n].partial = true;
        continue;
      }
      int ai = static_cast<int>(nodes_[n].alts.size());
      std::set<int> distinct(children.begin(), children.end());
      int remaining = 0;
      for (int c : distinct) {
        if (!nodes_[c].proved) ++remaining;
        nodes_[c].parents.emplace_back(n, ai);
      }
      nodes_[n].alts.push_back(AltRec{std::move(alt), std::move(children), remaining});
      if (remaining == 0) {
        mark_proved(n, ai);
        return;
      }
    }
  }

  void mark_proved(int n, int alt) {
    std::vector<std::pair<int, int>> work{{n, alt}};
    while (!work.empty()) {
      auto [m, a] = work.back();
      work.pop_back();
      if (nodes_[m].proved) continue;
      nodes_[m].proved = true;
      nodes_[m].just = a;
      for (auto [p, pa] : nodes_[m].parents) {
        if (nodes_[p].proved) continue;
        if (--nodes_[p].alts[static_cast<std::size_t>(pa)].remaining == 0) work.emplace_back(p, pa);
      }
    }
  }

  /// Least fixpoint that assumes every unexpanded state is provable.
  bool possibly_provable(int root) const {
    std::vector<char> possible(nodes_.size(), 0);
    std::vector<int> work;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      const Node& n = nodes_[i];
      if (n.proved || !n.expanded || n.partial) {
        possible[i] = 1;
        work.push_back(static_cast<int>(i));
      }
    }
    while (!work.empty()) {
      int m = work.back();
      work.pop_back();
      for (auto [p, pa] : nodes_[static_cast<std::size_t>(m)].parents) {
        if (possible[static_cast<std::size_t>(p)]) continue;
        const AltRec& alt = nodes_[static_cast<std::size_t>(p)].alts[static_cast<std::size_t>(pa)];
        bool all = true;
        for (int c : alt.children) all = all && possible[static_cast<std::size_t>(c)];
        if (all) {
          possible[static_cast<std::size_t>(p)] = 1;
          work.push_back(p);
        }
      }
    }
    return possible[static_cast<std::size_t>(root)] != 0;
  }

  Proof extract(int n) const {
    const Node& node = nodes_[static_cast<std::size_t>(n)];
    const AltRec& a = node.alts[static_cast<std::size_t>(node.just)];
    Proof p;
    p.rule = a.alt.rule;
    p.conclusion = node.seq;
    p.at = a.alt.at;
    p.label = a.alt.label;
    for (int c : a.children) p.premises.push_back(extract(c));
    return p;
  }

  Expand expand_;
  Key key_;
  Budget budget_;
  std::vector<Node> nodes_;
  std::unordered_map<std::string, int> index_;
  std::deque<int> queue_;
  bool capped_ = false;
};

// Cheap, invertible rules first; the order affects speed only.
constexpr Rule kClassicalOrder[] = {
    Rule::Init, Rule::OneAx, Rule::TopAx, Rule::BotIntro, Rule::Par,    Rule::With, Rule::Der, Rule::PlusL,
    Rule::PlusR, Rule::Tensor, Rule::Prom, Rule::QW,      Rule::QE,     Rule::QA1,  Rule::QA2,
};

// `canonical` dedups alternatives up to structural equivalence, otherwise
// only up to literal text.
std::vector<Alt> expand_classical(const Sequent& s, const Signature& sig, bool contraction, bool canonical) {
  auto text = [canonical](const Structure& x) { return canonical ? canonicalize(x).text() : x.text(); };
  std::vector<Alt> out;
  const Structure& c = s.context;
  for (Rule r : kClassicalOrder) {
    std::set<std::string> seen;
    for (auto& inst : backward_instances(r, c, sig)) {
      std::string key;
      for (const auto& p : inst.premises) key += text(p) + "|";
      if (!seen.insert(key).second) continue;
      Alt alt{r, inst.source, std::nullopt, {}, false};
      for (auto& p : inst.premises) alt.premises.push_back(Sequent::classical(std::move(p)));
      out.push_back(std::move(alt));
    }
  }
  if (!contraction) return out;
  std::set<std::string> seen;
  for (const Rotation& r : subtree_rotations(c)) {
    if (r.rest.is_empty()) continue;
    for (int flip = 0; flip < 2; ++flip) {
      Structure q = flip ? r.rest : r.principal;
      Structure rest = flip ? r.principal : r.rest;
      if (!is_licensed_structure(sig, q, Connective::Quest, Axiom::C)) continue;
      Structure whole = Structure::pair(rest, q);
      for (auto& d : duplications(whole, Path({Dir::R}))) {
        if (!seen.insert(text(d.result)).second) continue;
        out.push_back(Alt{Rule::QC, std::move(d.copies), std::nullopt, {Sequent::classical(d.result)}, true});
      }
    }
  }
  if (c.is_leaf() && is_licensed_structure(sig, c, Connective::Quest, Axiom::C)) {
    for (auto& d : duplications(c, Path()))
      out.push_back(Alt{Rule::QC, std::move(d.copies), std::nullopt, {Sequent::classical(d.result)}, true});
  }
  return out;
}

std::vector<Alt> expand_intuitionistic(const Sequent& s, const Signature& sig, IConfig cfg, bool contraction) {
  std::vector<Alt> out;
  for (auto& i : all_instances_i(s, sig, cfg))
    out.push_back(Alt{i.rule, std::move(i.at), std::move(i.label), std::move(i.premises), false});
  if (contraction)
    for (auto& i : contraction_instances(s, sig))
      out.push_back(Alt{i.rule, std::move(i.at), std::move(i.label), std::move(i.premises), true});
  return out;
}

}  // namespace

SearchOutcome prove_classical(const Sequent& goal, const Signature& sig, const Budget& budget) {
  require_classical(goal);
  bool canonical = budget.memo;
  Engine e([&](const Sequent& s, bool k) { return expand_classical(s, sig, k, canonical); },
           [canonical](const Sequent& s) { return canonical ? canonicalize(s.context).text() : s.text(); }, budget);
  SearchOutcome out = e.run(goal);
  if (out.proof) {
    if (auto v = check_proof(*out.proof, sig, Mode::Modulo))
      throw Error(ErrorCode::Internal, "search produced a proof that does not check: " + v->where() + ": " + v->message);
  }
  return out;
}

SearchOutcome prove_intuitionistic(const Sequent& goal, const Signature& sig, IConfig cfg, const Budget& budget) {
  require_intuitionistic(goal, cfg.zero);
  Engine e([&](const Sequent& s, bool k) { return expand_intuitionistic(s, sig, cfg, k); },
           [](const Sequent& s) { return s.text(); }, budget);
  SearchOutcome out = e.run(goal);
  if (out.proof) {
    if (auto v = check_proof_i(*out.proof, sig, cfg))
      throw Error(ErrorCode::Internal, "search produced a proof that does not check: " + v->where() + ": " + v->message);
  }
  return out;
}

}  // namespace nacll
