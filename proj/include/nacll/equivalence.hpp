// SPDX-License-Identifier: Apache-2.0
//
// Structural equivalence: the closure of top-level exchange and
// reassociation. Every class is navigated through the designator, which
// rotates a chosen subtree to the top-right position.
#pragma once

#include <vector>

#include "nacll/syntax.hpp"

namespace nacll {

enum class StructuralRule : std::uint8_t { E, A1, A2 };

const char* structural_rule_name(StructuralRule r);

/// One top-level structural inference read backwards: `conclusion` is
/// rewritten into `premise`.
struct StructuralStep {
  StructuralRule rule;
  Structure conclusion;
  Structure premise;
};

/// The designated structure of `s` with the subtree at `marker` replaced by
/// the marker: what remains once that subtree has been rotated to the top
/// right and dropped. If `trace` is given, it receives the E/A1/A2 steps
/// taking `s` to (result, at(s, marker)).
Structure designate(const Structure& s, const Path& marker, std::vector<StructuralStep>* trace = nullptr);

/// A structure re-rooted so that one of its subtrees sits on the top right.
struct Rotation {
  Path source;          // where the principal subtree was in the input
  Structure rest;       // may be empty when the input is the subtree itself
  Structure principal;  // the rotated subtree
  Structure whole() const { return Structure::pair(rest, principal); }
};

Rotation rotate(const Structure& s, const Path& p);
/// One rotation per formula leaf, in left-to-right leaf order.
std::vector<Rotation> rotations(const Structure& s);
/// One rotation per node (the root included, with an empty rest).
std::vector<Rotation> subtree_rotations(const Structure& s);

/// Least rotation by printed form; equal for equivalent structures.
Structure canonicalize(const Structure& s);
/// The path of the leaf whose rotation is the canonical form.
Path canonical_leaf(const Structure& s);
bool equivalent(const Structure& s, const Structure& t);

/// E/A1/A2 steps turning `from` into `to` (read backwards: each step's
/// conclusion is the previous step's premise). Throws if not equivalent.
std::vector<StructuralStep> structural_bridge(const Structure& from, const Structure& to);

}  // namespace nacll
