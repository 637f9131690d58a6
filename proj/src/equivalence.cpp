// SPDX-License-Identifier: Apache-2.0
#include "nacll/equivalence.hpp"

namespace nacll {

const char* structural_rule_name(StructuralRule r) {
  switch (r) {
    case StructuralRule::E: return "E";
    case StructuralRule::A1: return "A1";
    case StructuralRule::A2: return "A2";
  }
  return "?";
}

Structure designate(const Structure& s, const Path& marker, std::vector<StructuralStep>* trace) {
  if (!valid_path(s, marker)) throw Error(ErrorCode::InvalidPath, "designate: invalid path " + marker.str());
  Structure cur = s;
  std::vector<Dir> p = marker.steps;
  auto step = [&](StructuralRule r, Structure next) {
    if (trace) trace->push_back({r, cur, next});
    cur = std::move(next);
  };
  // Each case leaves the marker on the right branch with strictly smaller depth.
  while (!p.empty()) {
    if (p[0] == Dir::L) {
      step(StructuralRule::E, Structure::pair(cur.right(), cur.left()));
      p[0] = Dir::R;
      continue;
    }
    if (p.size() == 1) return cur.left();
    Structure gamma = cur.left(), delta = cur.right().left(), pi = cur.right().right();
    if (p[1] == Dir::R) {
      // (G, (D, P{*})) -> ((G, D), P{*})
      step(StructuralRule::A2, Structure::pair(Structure::pair(gamma, delta), pi));
    } else {
      // (G, (D{*}, P)) -> ((P, G), D{*}), via E, A1, E
      step(StructuralRule::E, Structure::pair(cur.right(), gamma));
      step(StructuralRule::A1, Structure::pair(delta, Structure::pair(pi, gamma)));
      step(StructuralRule::E, Structure::pair(Structure::pair(pi, gamma), delta));
      p[1] = Dir::R;
    }
    p.erase(p.begin());
  }
  return Structure::empty();
}

Rotation rotate(const Structure& s, const Path& p) {
  return Rotation{p, designate(s, p), at(s, p)};
}

std::vector<Rotation> rotations(const Structure& s) {
  std::vector<Rotation> out;
  for (const auto& [path, f] : leaves(s)) out.push_back(rotate(s, path));
  return out;
}

std::vector<Rotation> subtree_rotations(const Structure& s) {
  std::vector<Rotation> out;
  for (const Path& p : node_paths(s)) out.push_back(rotate(s, p));
  return out;
}

Path canonical_leaf(const Structure& s) {
  if (s.is_empty()) throw Error(ErrorCode::IllFormed, "canonicalize: empty structure");
  const Structure* best = nullptr;
  Path best_path;
  std::vector<Rotation> rots = rotations(s);
  std::vector<Structure> wholes;
  wholes.reserve(rots.size());
  for (const auto& r : rots) wholes.push_back(r.whole());
  for (std::size_t i = 0; i < rots.size(); ++i)
    if (!best || wholes[i].text() < best->text()) {
      best = &wholes[i];
      best_path = rots[i].source;
    }
  return best_path;
}

Structure canonicalize(const Structure& s) {
  if (s.is_empty()) throw Error(ErrorCode::IllFormed, "canonicalize: empty structure");
  if (s.is_leaf()) return s;
  std::optional<Structure> best;
  for (const auto& [path, f] : leaves(s)) {
    Structure w = Structure::pair(designate(s, path), Structure::leaf(f));
    if (!best || w.text() < best->text()) best = std::move(w);
  }
  return *best;
}

bool equivalent(const Structure& s, const Structure& t) {
  if (s.is_empty() || t.is_empty()) return s.is_empty() && t.is_empty();
  if (s.leaf_count() != t.leaf_count()) return false;
  return canonicalize(s) == canonicalize(t);
}

namespace {
StructuralStep inverse(const StructuralStep& st) {
  StructuralRule r = st.rule == StructuralRule::E    ? StructuralRule::E
                     : st.rule == StructuralRule::A1 ? StructuralRule::A2
                                                     : StructuralRule::A1;
  return {r, st.premise, st.conclusion};
}
}  // namespace

std::vector<StructuralStep> structural_bridge(const Structure& from, const Structure& to) {
  if (from == to) return {};
  if (!equivalent(from, to))
    throw Error(ErrorCode::IllFormed, "structural_bridge: " + from.text() + " is not equivalent to " + to.text());
  std::vector<StructuralStep> forward, backward;
  designate(from, canonical_leaf(from), &forward);
  designate(to, canonical_leaf(to), &backward);
  for (auto it = backward.rbegin(); it != backward.rend(); ++it) forward.push_back(inverse(*it));
  return forward;
}

}  // namespace nacll
