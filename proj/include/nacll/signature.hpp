// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "nacll/syntax.hpp"

namespace nacll {

enum class Axiom : std::uint8_t { C = 1, W = 2, E = 4, A1 = 8, A2 = 16 };

/// Bit set over {C, W, E, A1, A2}.
class AxiomSet {
 public:
  AxiomSet() = default;
  AxiomSet(std::initializer_list<Axiom> axioms) {
    for (Axiom a : axioms) insert(a);
  }
  void insert(Axiom a) { bits_ |= static_cast<std::uint8_t>(a); }
  bool contains(Axiom a) const { return bits_ & static_cast<std::uint8_t>(a); }
  bool subset_of(AxiomSet other) const { return (bits_ & ~other.bits_) == 0; }
  bool empty() const { return bits_ == 0; }
  std::string str() const;
  friend bool operator==(AxiomSet, AxiomSet) = default;

 private:
  std::uint8_t bits_ = 0;
};

const char* axiom_name(Axiom a);
std::optional<Axiom> axiom_from_name(std::string_view name);

/// A simply dependent multimodal signature: labels, a preorder on them and
/// the axioms each label licenses. The preorder is stored closed.
class Signature {
 public:
  Signature() = default;

  /// Adds or overwrites a label. Invalidates nothing; call `close()` after
  /// the last `add_order`.
  void add_label(const std::string& label, AxiomSet axioms);
  void add_order(const std::string& lower, const std::string& upper);
  /// Reflexive-transitive closure, then the upward-closure check.
  void close();

  bool has_label(const std::string& label) const { return index_.count(label) != 0; }
  /// Labels not declared have no axioms.
  AxiomSet axioms(const std::string& label) const;
  bool licenses(const std::string& label, Axiom a) const { return axioms(label).contains(a); }
  /// i <= j. Undeclared labels are only related to themselves.
  bool leq(const std::string& i, const std::string& j) const;

  std::vector<std::string> labels() const { return names_; }
  /// True if every label's axioms lie within `allowed`.
  bool axioms_within(AxiomSet allowed) const;

  std::string text() const;

 private:
  std::map<std::string, int> index_;
  std::vector<std::string> names_;
  std::vector<AxiomSet> axioms_;
  std::vector<std::vector<bool>> leq_;
};

Signature load_signature(std::string_view text);

/// Outcome of the upset restriction Γ^{↑i}.
struct UpsetResult {
  enum class Status { Defined, Undefined, NotApplicable } status;
  Structure restricted;  // meaningful only when Defined
};

/// Γ^{↑i} for a context of ?-formulas (or !-formulas when `modality` is
/// Bang, the two-sided mirror). Leaves with label j, i <= j, are kept;
/// leaves with i !<= k and W in f(k) are erased; anything else makes the
/// result Undefined. A leaf of another shape gives NotApplicable.
UpsetResult upset_restrict(const Signature& sig, const Structure& context, const std::string& label,
                           Connective modality = Connective::Quest);

/// True if every leaf of `s` is `modality`-marked with a label licensing `axiom`.
bool is_licensed_structure(const Signature& sig, const Structure& s, Connective modality, Axiom axiom);

}  // namespace nacll
