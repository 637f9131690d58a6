// SPDX-License-Identifier: Apache-2.0
#include "nacll/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

namespace nacll {

// ---------------------------------------------------------------------------
// Formula

const char* connective_symbol(Connective c) {
  switch (c) {
    case Connective::Tensor: return "*";
    case Connective::Par: return "#";
    case Connective::Plus: return "+";
    case Connective::With: return "&";
    case Connective::ImplR: return "->";
    case Connective::ImplL: return "<-";
    case Connective::One: return "1";
    case Connective::Bot: return "bot";
    case Connective::Zero: return "0";
    case Connective::Top: return "top";
    case Connective::Bang: return "!";
    case Connective::Quest: return "?";
    case Connective::Atom:
    case Connective::NegAtom: return "";
  }
  return "";
}

Formula Formula::make(Connective kind, std::string name, const Formula* a, const Formula* b) {
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->name = std::move(name);
  if (a) n->lhs = a->node_;
  if (b) n->rhs = b->node_;
  switch (kind) {
    case Connective::Atom: n->text = n->name; break;
    case Connective::NegAtom: n->text = n->name + "^"; break;
    case Connective::One:
    case Connective::Bot:
    case Connective::Zero:
    case Connective::Top: n->text = connective_symbol(kind); break;
    case Connective::Bang:
    case Connective::Quest:
      n->text = std::string(connective_symbol(kind)) + "[" + n->name + "]" + a->text();
      n->connectives = 1 + a->connectives();
      break;
    default:
      n->text = "(" + a->text() + " " + connective_symbol(kind) + " " + b->text() + ")";
      n->connectives = 1 + a->connectives() + b->connectives();
      break;
  }
  if (kind == Connective::One || kind == Connective::Bot || kind == Connective::Zero ||
      kind == Connective::Top)
    n->connectives = 1;
  return Formula(std::move(n));
}

Formula Formula::atom(std::string name) { return make(Connective::Atom, std::move(name), nullptr, nullptr); }
Formula Formula::neg_atom(std::string name) { return make(Connective::NegAtom, std::move(name), nullptr, nullptr); }
Formula Formula::tensor(Formula a, Formula b) { return make(Connective::Tensor, {}, &a, &b); }
Formula Formula::par(Formula a, Formula b) { return make(Connective::Par, {}, &a, &b); }
Formula Formula::plus(Formula a, Formula b) { return make(Connective::Plus, {}, &a, &b); }
Formula Formula::with(Formula a, Formula b) { return make(Connective::With, {}, &a, &b); }
Formula Formula::one() { return make(Connective::One, {}, nullptr, nullptr); }
Formula Formula::bot() { return make(Connective::Bot, {}, nullptr, nullptr); }
Formula Formula::zero() { return make(Connective::Zero, {}, nullptr, nullptr); }
Formula Formula::top() { return make(Connective::Top, {}, nullptr, nullptr); }
Formula Formula::bang(std::string label, Formula body) { return make(Connective::Bang, std::move(label), &body, nullptr); }
Formula Formula::quest(std::string label, Formula body) { return make(Connective::Quest, std::move(label), &body, nullptr); }
Formula Formula::impl_r(Formula a, Formula b) { return make(Connective::ImplR, {}, &a, &b); }
Formula Formula::impl_l(Formula b, Formula a) { return make(Connective::ImplL, {}, &b, &a); }

Formula Formula::binary(Connective c, Formula a, Formula b) {
  switch (c) {
    case Connective::Tensor: return tensor(std::move(a), std::move(b));
    case Connective::Par: return par(std::move(a), std::move(b));
    case Connective::Plus: return plus(std::move(a), std::move(b));
    case Connective::With: return with(std::move(a), std::move(b));
    case Connective::ImplR: return impl_r(std::move(a), std::move(b));
    case Connective::ImplL: return impl_l(std::move(a), std::move(b));
    default: throw Error(ErrorCode::Internal, "binary(): not a binary connective");
  }
}

bool Formula::is_binary() const noexcept {
  switch (kind()) {
    case Connective::Tensor:
    case Connective::Par:
    case Connective::Plus:
    case Connective::With:
    case Connective::ImplR:
    case Connective::ImplL: return true;
    default: return false;
  }
}

Formula negate(const Formula& f) {
  switch (f.kind()) {
    case Connective::Atom: return Formula::neg_atom(f.name());
    case Connective::NegAtom: return Formula::atom(f.name());
    case Connective::Tensor: return Formula::par(negate(f.rhs()), negate(f.lhs()));
    case Connective::Par: return Formula::tensor(negate(f.rhs()), negate(f.lhs()));
    case Connective::Plus: return Formula::with(negate(f.lhs()), negate(f.rhs()));
    case Connective::With: return Formula::plus(negate(f.lhs()), negate(f.rhs()));
    case Connective::One: return Formula::bot();
    case Connective::Bot: return Formula::one();
    case Connective::Zero: return Formula::top();
    case Connective::Top: return Formula::zero();
    case Connective::Bang: return Formula::quest(f.label(), negate(f.body()));
    case Connective::Quest: return Formula::bang(f.label(), negate(f.body()));
    case Connective::ImplR:
    case Connective::ImplL:
      throw Error(ErrorCode::IllFormed, "negate: implication is not a classical connective: " + f.text());
  }
  throw Error(ErrorCode::Internal, "negate: unknown connective");
}

bool is_classical(const Formula& f) {
  switch (f.kind()) {
    case Connective::ImplR:
    case Connective::ImplL: return false;
    case Connective::Bang:
    case Connective::Quest: return is_classical(f.body());
    default:
      if (f.is_binary()) return is_classical(f.lhs()) && is_classical(f.rhs());
      return true;
  }
}

bool is_intuitionistic(const Formula& f, bool allow_zero) {
  switch (f.kind()) {
    case Connective::Par:
    case Connective::Quest:
    case Connective::NegAtom:
    case Connective::Bot: return false;
    case Connective::Zero: return allow_zero;
    case Connective::Bang: return is_intuitionistic(f.body(), allow_zero);
    default:
      if (f.is_binary()) return is_intuitionistic(f.lhs(), allow_zero) && is_intuitionistic(f.rhs(), allow_zero);
      return true;
  }
}

void require_classical(const Sequent& s) {
  if (s.is_intuitionistic()) throw Error(ErrorCode::IllFormed, "expected a classical sequent: " + s.text());
  if (s.context.is_empty()) throw Error(ErrorCode::IllFormed, "classical sequent must be non-empty");
  for (const auto& [p, f] : leaves(s.context))
    if (!is_classical(f)) throw Error(ErrorCode::IllFormed, "not a classical formula: " + f.text());
}

void require_intuitionistic(const Sequent& s, bool allow_zero) {
  if (!s.is_intuitionistic()) throw Error(ErrorCode::IllFormed, "expected an intuitionistic sequent: " + s.text());
  auto check = [&](const Formula& f) {
    if (!is_intuitionistic(f, allow_zero))
      throw Error(ErrorCode::IllFormed, "not an intuitionistic formula: " + f.text());
  };
  for (const auto& [p, f] : leaves(s.context)) check(f);
  check(*s.goal);
}

// ---------------------------------------------------------------------------
// Path

Path Path::parse(std::string_view text) {
  Path p;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == 'L') p.steps.push_back(Dir::L);
    else if (text[i] == 'R') p.steps.push_back(Dir::R);
    else throw ParseError(i, "path may only contain L and R");
  }
  return p;
}

std::string Path::str() const {
  std::string out;
  for (Dir d : steps) out.push_back(d == Dir::L ? 'L' : 'R');
  return out;
}

Path Path::child(Dir d) const {
  Path p = *this;
  p.steps.push_back(d);
  return p;
}

bool Path::is_prefix_of(const Path& other) const {
  return steps.size() <= other.steps.size() && std::equal(steps.begin(), steps.end(), other.steps.begin());
}

// ---------------------------------------------------------------------------
// Structure

Structure::Structure() {
  static const auto empty_node = [] {
    auto n = std::make_shared<Node>();
    n->text = "()";
    return n;
  }();
  node_ = empty_node;
}

Structure Structure::leaf(Formula f) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Leaf;
  n->text = f.text();
  n->formula = std::move(f);
  n->leaves = 1;
  return Structure(std::move(n));
}

Structure Structure::pair(Structure a, Structure b) {
  if (a.is_empty()) return b;
  if (b.is_empty()) return a;
  auto n = std::make_shared<Node>();
  n->kind = Kind::Pair;
  n->text.reserve(a.text().size() + b.text().size() + 4);
  n->text = "(" + a.text() + ", " + b.text() + ")";
  n->leaves = a.leaf_count() + b.leaf_count();
  n->left = std::move(a.node_);
  n->right = std::move(b.node_);
  return Structure(std::move(n));
}

const Formula& Structure::formula() const {
  if (!is_leaf()) throw Error(ErrorCode::InvalidPath, "structure is not a formula leaf: " + text());
  return *node_->formula;
}

Structure Structure::left() const {
  if (!is_pair()) throw Error(ErrorCode::InvalidPath, "structure is not a pair: " + text());
  return Structure(node_->left);
}

Structure Structure::right() const {
  if (!is_pair()) throw Error(ErrorCode::InvalidPath, "structure is not a pair: " + text());
  return Structure(node_->right);
}

RawStructure RawStructure::leaf(Formula f) {
  RawStructure r;
  r.kind = Kind::Leaf;
  r.formula = std::move(f);
  return r;
}

RawStructure RawStructure::pair(RawStructure a, RawStructure b) {
  RawStructure r;
  r.kind = Kind::Pair;
  r.left = std::make_shared<RawStructure>(std::move(a));
  r.right = std::make_shared<RawStructure>(std::move(b));
  return r;
}

Structure normalize(const RawStructure& s) {
  switch (s.kind) {
    case RawStructure::Kind::Empty: return Structure::empty();
    case RawStructure::Kind::Leaf: return Structure::leaf(*s.formula);
    case RawStructure::Kind::Pair: return Structure::pair(normalize(*s.left), normalize(*s.right));
  }
  return Structure::empty();
}

std::string Sequent::text() const {
  if (goal) return context.text() + " |- " + goal->text();
  return "|- " + context.text();
}

Structure at(const Structure& s, const Path& p) {
  Structure cur = s;
  for (Dir d : p.steps) {
    if (!cur.is_pair()) throw Error(ErrorCode::InvalidPath, "invalid path " + p.str() + " for " + s.text());
    cur = d == Dir::L ? cur.left() : cur.right();
  }
  if (cur.is_empty()) throw Error(ErrorCode::InvalidPath, "invalid path " + p.str() + " for empty structure");
  return cur;
}

bool valid_path(const Structure& s, const Path& p) {
  Structure cur = s;
  for (Dir d : p.steps) {
    if (!cur.is_pair()) return false;
    cur = d == Dir::L ? cur.left() : cur.right();
  }
  return !cur.is_empty();
}

namespace {

Structure replace_from(const Structure& s, const Path& p, std::size_t i, const Structure& t) {
  if (i == p.size()) return t;
  if (!s.is_pair()) throw Error(ErrorCode::InvalidPath, "invalid path " + p.str() + " for " + s.text());
  if (p.steps[i] == Dir::L) return Structure::pair(replace_from(s.left(), p, i + 1, t), s.right());
  return Structure::pair(s.left(), replace_from(s.right(), p, i + 1, t));
}

using Edit = std::pair<Path, Structure>;

Structure replace_many_from(const Structure& s, std::vector<const Edit*> edits, std::size_t depth) {
  for (const Edit* e : edits)
    if (e->first.size() == depth) {
      if (edits.size() != 1) throw Error(ErrorCode::InvalidPath, "replace: overlapping paths");
      return e->second;
    }
  if (edits.empty()) return s;
  if (!s.is_pair()) throw Error(ErrorCode::InvalidPath, "replace: invalid path for " + s.text());
  std::vector<const Edit*> l, r;
  for (const Edit* e : edits) (e->first.steps[depth] == Dir::L ? l : r).push_back(e);
  return Structure::pair(replace_many_from(s.left(), std::move(l), depth + 1),
                         replace_many_from(s.right(), std::move(r), depth + 1));
}

}  // namespace

Structure replace(const Structure& s, const Path& p, const Structure& t) {
  if (!valid_path(s, p)) throw Error(ErrorCode::InvalidPath, "invalid path " + p.str() + " for " + s.text());
  return replace_from(s, p, 0, t);
}

Structure replace_many(const Structure& s, const std::vector<std::pair<Path, Structure>>& edits) {
  std::vector<const Edit*> ptrs;
  for (const auto& e : edits) {
    if (!valid_path(s, e.first))
      throw Error(ErrorCode::InvalidPath, "invalid path " + e.first.str() + " for " + s.text());
    ptrs.push_back(&e);
  }
  return replace_many_from(s, std::move(ptrs), 0);
}

std::vector<Duplication> duplications(const Structure& s, const Path& q) {
  std::vector<Duplication> out;
  Structure copy = at(s, q);
  if (q.empty()) {
    out.push_back({Structure::pair(s, s), {Path({Dir::L}), Path({Dir::R})}});
    return out;
  }
  for (const Path& n : node_paths(s)) {
    if (q.is_prefix_of(n)) continue;
    Structure target = at(s, n);
    for (Dir side : {Dir::L, Dir::R}) {
      Structure ins = side == Dir::L ? Structure::pair(copy, target) : Structure::pair(target, copy);
      Path old_copy = q;
      if (n.is_prefix_of(q)) {
        // The original moves one level down, under the other side.
        std::vector<Dir> steps = n.steps;
        steps.push_back(side == Dir::L ? Dir::R : Dir::L);
        steps.insert(steps.end(), q.steps.begin() + static_cast<std::ptrdiff_t>(n.size()), q.steps.end());
        old_copy = Path(std::move(steps));
      }
      std::vector<Path> copies{old_copy, n.child(side)};
      if (copies[1] < copies[0]) std::swap(copies[0], copies[1]);
      out.push_back({replace(s, n, ins), std::move(copies)});
    }
  }
  return out;
}

std::vector<std::pair<Path, Formula>> leaves(const Structure& s) {
  std::vector<std::pair<Path, Formula>> out;
  Path cur;
  std::function<void(const Structure&)> walk = [&](const Structure& t) {
    if (t.is_leaf()) {
      out.emplace_back(cur, t.formula());
    } else if (t.is_pair()) {
      cur.steps.push_back(Dir::L);
      walk(t.left());
      cur.steps.back() = Dir::R;
      walk(t.right());
      cur.steps.pop_back();
    }
  };
  walk(s);
  return out;
}

std::vector<Path> node_paths(const Structure& s) {
  std::vector<Path> out;
  if (s.is_empty()) return out;
  Path cur;
  std::function<void(const Structure&)> walk = [&](const Structure& t) {
    out.push_back(cur);
    if (t.is_pair()) {
      cur.steps.push_back(Dir::L);
      walk(t.left());
      cur.steps.back() = Dir::R;
      walk(t.right());
      cur.steps.pop_back();
    }
  };
  walk(s);
  return out;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ == text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool starts_with(std::string_view s) {
    skip_ws();
    return text_.substr(pos_, s.size()) == s;
  }
  void expect(std::string_view s) {
    if (!starts_with(s)) fail("expected '" + std::string(s) + "'");
    pos_ += s.size();
  }
  [[noreturn]] void fail(const std::string& msg) { throw ParseError(pos_, msg); }
  std::size_t pos() const { return pos_; }

  std::string identifier(bool label) {
    skip_ws();
    std::size_t start = pos_;
    auto ok_first = [&](char c) {
      return label ? (std::isalnum(static_cast<unsigned char>(c)) || c == '_') : (c >= 'a' && c <= 'z');
    };
    auto ok_rest = [&](char c) {
      return label ? (std::isalnum(static_cast<unsigned char>(c)) || c == '_')
                   : ((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_');
    };
    if (pos_ >= text_.size() || !ok_first(text_[pos_])) fail(label ? "expected a label" : "expected an atom");
    ++pos_;
    while (pos_ < text_.size() && ok_rest(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::optional<Connective> binary_op() {
    skip_ws();
    static const std::pair<std::string_view, Connective> ops[] = {
        {"->", Connective::ImplR}, {"<-", Connective::ImplL}, {"*", Connective::Tensor},
        {"#", Connective::Par},    {"+", Connective::Plus},   {"&", Connective::With},
    };
    for (const auto& [tok, c] : ops)
      if (starts_with(tok)) {
        pos_ += tok.size();
        return c;
      }
    return std::nullopt;
  }

  Formula formula() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Formula a = formula();
      auto op = binary_op();
      if (!op) fail("expected a binary connective (formulas must be fully parenthesized)");
      Formula b = formula();
      expect(")");
      return Formula::binary(*op, a, b);
    }
    return unit_or_atom();
  }

  Formula unit_or_atom() {
    char c = peek();
    if (c == '!' || c == '?') {
      ++pos_;
      expect("[");
      std::string label = identifier(true);
      expect("]");
      Formula body = formula();
      return c == '!' ? Formula::bang(label, body) : Formula::quest(label, body);
    }
    if (c == '1') {
      ++pos_;
      return Formula::one();
    }
    if (c == '0') {
      ++pos_;
      return Formula::zero();
    }
    if (c >= 'a' && c <= 'z') {
      std::size_t start = pos_;
      std::string name = identifier(false);
      if (name == "bot" || name == "top") {
        if (pos_ < text_.size() && text_[pos_] == '^') {
          pos_ = start;
          fail("only atoms can be negated");
        }
        return name == "bot" ? Formula::bot() : Formula::top();
      }
      if (pos_ < text_.size() && text_[pos_] == '^') {
        ++pos_;
        return Formula::neg_atom(name);
      }
      return Formula::atom(name);
    }
    fail("expected a formula");
  }

  // Structure: "()" | formula | "(" S "," S ")". A leading '(' is shared by
  // pairs and binary formulas; the token after the first element decides.
  RawStructure structure() {
    if (peek() != '(') return RawStructure::leaf(unit_or_atom());
    ++pos_;
    if (peek() == ')') {
      ++pos_;
      return RawStructure::empty();
    }
    RawStructure first = structure();
    if (peek() == ',') {
      ++pos_;
      RawStructure second = structure();
      expect(")");
      return RawStructure::pair(std::move(first), std::move(second));
    }
    auto op = binary_op();
    if (!op) fail("expected ',' or a binary connective");
    if (first.kind != RawStructure::Kind::Leaf) fail("left operand of a connective must be a formula");
    Formula rhs = formula();
    expect(")");
    return RawStructure::leaf(Formula::binary(*op, *first.formula, rhs));
  }

  void finish() {
    if (!at_end()) fail("unexpected trailing input");
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula parse_formula(std::string_view text) {
  Parser p(text);
  Formula f = p.formula();
  p.finish();
  return f;
}

RawStructure parse_raw_structure(std::string_view text) {
  Parser p(text);
  RawStructure s = p.structure();
  p.finish();
  return s;
}

Structure parse_structure(std::string_view text) { return normalize(parse_raw_structure(text)); }

Sequent parse_sequent(std::string_view text) {
  Parser p(text);
  if (p.starts_with("|-")) {
    p.expect("|-");
    Structure s = normalize(p.structure());
    p.finish();
    if (s.is_empty()) throw ParseError(p.pos(), "classical sequent must be non-empty");
    return Sequent::classical(std::move(s));
  }
  Structure ante = normalize(p.structure());
  p.expect("|-");
  Formula goal = p.formula();
  p.finish();
  return Sequent::intuitionistic(std::move(ante), std::move(goal));
}

}  // namespace nacll
