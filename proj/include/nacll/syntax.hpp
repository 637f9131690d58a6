// SPDX-License-Identifier: Apache-2.0
//
// Formulas, structures (binary trees of formulas) and sequents.
//
// All values are immutable and share subterms; copying is a reference-count
// bump. Every node caches its printed form, which doubles as the identity
// used for equality, hashing and ordering.
#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nacll/error.hpp"

namespace nacll {

enum class Connective : std::uint8_t {
  Atom,
  NegAtom,
  Tensor,
  Par,
  Plus,
  With,
  One,
  Bot,
  Zero,
  Top,
  Bang,
  Quest,
  ImplR,  // A -> B
  ImplL,  // B <- A
};

class Formula {
 public:
  static Formula atom(std::string name);
  static Formula neg_atom(std::string name);
  static Formula tensor(Formula a, Formula b);
  static Formula par(Formula a, Formula b);
  static Formula plus(Formula a, Formula b);
  static Formula with(Formula a, Formula b);
  static Formula one();
  static Formula bot();
  static Formula zero();
  static Formula top();
  static Formula bang(std::string label, Formula body);
  static Formula quest(std::string label, Formula body);
  /// `a -> b`
  static Formula impl_r(Formula a, Formula b);
  /// `b <- a`; the stored children are (b, a) in written order.
  static Formula impl_l(Formula b, Formula a);
  static Formula binary(Connective c, Formula a, Formula b);

  Connective kind() const noexcept { return node_->kind; }
  /// Atom name for literals, subexponential label for Bang/Quest, empty otherwise.
  const std::string& name() const noexcept { return node_->name; }
  const std::string& label() const noexcept { return node_->name; }
  /// Left operand in written order (or the body of a modality).
  Formula lhs() const { return Formula(node_->lhs); }
  Formula rhs() const { return Formula(node_->rhs); }
  Formula body() const { return Formula(node_->lhs); }

  bool is_binary() const noexcept;
  bool is_literal() const noexcept {
    return kind() == Connective::Atom || kind() == Connective::NegAtom;
  }
  /// Number of connective occurrences (literals count zero).
  int connectives() const noexcept { return node_->connectives; }

  const std::string& text() const noexcept { return node_->text; }

  friend bool operator==(const Formula& a, const Formula& b) {
    return a.node_ == b.node_ || a.node_->text == b.node_->text;
  }
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }
  friend bool operator<(const Formula& a, const Formula& b) { return a.text() < b.text(); }

 private:
  struct Node {
    Connective kind;
    std::string name;
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
    std::string text;
    int connectives = 0;
  };
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Formula make(Connective kind, std::string name, const Formula* a, const Formula* b);

  std::shared_ptr<const Node> node_;
};

const char* connective_symbol(Connective c);

enum class Dir : std::uint8_t { L, R };

/// Sequence of left/right steps from the root of a structure.
struct Path {
  std::vector<Dir> steps;

  Path() = default;
  explicit Path(std::vector<Dir> s) : steps(std::move(s)) {}

  static Path parse(std::string_view text);
  std::string str() const;
  bool empty() const noexcept { return steps.empty(); }
  std::size_t size() const noexcept { return steps.size(); }
  Path child(Dir d) const;
  /// True if `this` is a (non-strict) prefix of `other`.
  bool is_prefix_of(const Path& other) const;

  friend bool operator==(const Path&, const Path&) = default;
  friend auto operator<=>(const Path& a, const Path& b) { return a.steps <=> b.steps; }
};

/// A normalized structure: empty, a formula leaf, or a pair of non-empty
/// structures. `pair` applies the wipe-out equations, so an Empty never
/// sits under a Pair.
class Structure {
 public:
  enum class Kind : std::uint8_t { Empty, Leaf, Pair };

  Structure();  // empty
  static Structure empty() { return Structure(); }
  static Structure leaf(Formula f);
  static Structure pair(Structure a, Structure b);

  Kind kind() const noexcept { return node_->kind; }
  bool is_empty() const noexcept { return kind() == Kind::Empty; }
  bool is_leaf() const noexcept { return kind() == Kind::Leaf; }
  bool is_pair() const noexcept { return kind() == Kind::Pair; }

  const Formula& formula() const;
  Structure left() const;
  Structure right() const;

  int leaf_count() const noexcept { return node_->leaves; }
  const std::string& text() const noexcept { return node_->text; }

  friend bool operator==(const Structure& a, const Structure& b) {
    return a.node_ == b.node_ || a.node_->text == b.node_->text;
  }
  friend bool operator!=(const Structure& a, const Structure& b) { return !(a == b); }
  friend bool operator<(const Structure& a, const Structure& b) { return a.text() < b.text(); }

 private:
  struct Node {
    Kind kind = Kind::Empty;
    std::optional<Formula> formula;
    std::shared_ptr<const Node> left;
    std::shared_ptr<const Node> right;
    std::string text;
    int leaves = 0;
  };
  explicit Structure(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  std::shared_ptr<const Node> node_;
};

/// Un-normalized structure term, as written by a user. Only `normalize`
/// turns it into a `Structure`.
struct RawStructure {
  enum class Kind : std::uint8_t { Empty, Leaf, Pair } kind = Kind::Empty;
  std::optional<Formula> formula;
  std::shared_ptr<RawStructure> left, right;

  static RawStructure empty() { return {}; }
  static RawStructure leaf(Formula f);
  static RawStructure pair(RawStructure a, RawStructure b);
};

Structure normalize(const RawStructure& s);

/// `|- S` when `goal` is absent, `S |- F` otherwise.
struct Sequent {
  Structure context;
  std::optional<Formula> goal;

  static Sequent classical(Structure s) { return {std::move(s), std::nullopt}; }
  static Sequent intuitionistic(Structure antecedent, Formula succedent) {
    return {std::move(antecedent), std::move(succedent)};
  }
  bool is_intuitionistic() const noexcept { return goal.has_value(); }
  std::string text() const;

  friend bool operator==(const Sequent& a, const Sequent& b) {
    return a.context == b.context && a.goal == b.goal;
  }
};

// -- Structure navigation ---------------------------------------------------

Structure at(const Structure& s, const Path& p);
bool valid_path(const Structure& s, const Path& p);
/// Replaces the node at `p` with `t`; replacing with Empty removes the node
/// and collapses its parent.
Structure replace(const Structure& s, const Path& p, const Structure& t);
/// Simultaneous replacement at pairwise disjoint paths (all valid for `s`).
Structure replace_many(const Structure& s, const std::vector<std::pair<Path, Structure>>& edits);

/// Leaves in left-to-right order with their paths.
std::vector<std::pair<Path, Formula>> leaves(const Structure& s);
/// Every node path of a non-empty structure, in pre-order.
std::vector<Path> node_paths(const Structure& s);

/// A structure with a second copy of one of its subtrees.
struct Duplication {
  Structure result;
  std::vector<Path> copies;  // both copies' paths in `result`, sorted
};
/// Every way of placing a copy of the subtree at `q` beside a node of `s`
/// that does not lie inside that subtree.
std::vector<Duplication> duplications(const Structure& s, const Path& q);

// -- Negation and well-formedness --------------------------------------------

/// Pushes negation to the atoms. Multiplicatives swap operand order
/// ((A * B)^ = B^ # A^); additives keep it. Throws IllFormed on
/// intuitionistic implications.
Formula negate(const Formula& f);

bool is_classical(const Formula& f);
bool is_intuitionistic(const Formula& f, bool allow_zero);
void require_classical(const Sequent& s);
void require_intuitionistic(const Sequent& s, bool allow_zero);

// -- Parsing -----------------------------------------------------------------

Formula parse_formula(std::string_view text);
Structure parse_structure(std::string_view text);
RawStructure parse_raw_structure(std::string_view text);
Sequent parse_sequent(std::string_view text);

}  // namespace nacll
