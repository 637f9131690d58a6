// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nacll/syntax.hpp"

namespace nacll {

enum class Rule : std::uint8_t {
  // One-sided classical rules.
  Tensor,
  Par,
  PlusL,  // keep the left disjunct
  PlusR,  // keep the right disjunct
  With,
  BotIntro,
  OneAx,
  TopAx,
  Init,
  Cut,
  E,
  A1,
  A2,
  Prom,
  Der,
  QA1,
  QA2,
  QE,
  QW,
  QC,
  // Two-sided intuitionistic rules.
  Id,
  TensorL,
  TensorR,
  ArrowL,  // A -> B on the left
  ArrowR,
  BackL,  // B <- A on the left
  BackR,
  WithL1,
  WithL2,
  WithR,
  OplusL,
  OplusR1,
  OplusR2,
  OneL,
  OneR,
  TopR,
  ZeroL,
  BangL,
  BangR,
  BangW,
  BangC,
  BangE,
  A1L,
  A1M,
  A1R,
  A2L,
  A2M,
  A2R,
};

const char* rule_name(Rule r);
/// Accepts the names printed by `rule_name`; "IA1"/"IA2" are accepted as
/// the intuitionistic base-system names of A1L/A2R.
std::optional<Rule> rule_from_name(std::string_view name);
bool is_classical_rule(Rule r);

/// A derivation tree. `at` holds principal positions in the conclusion;
/// for QC and BangC it holds the positions of every copy in the premise.
struct Proof {
  Rule rule = Rule::Init;
  Sequent conclusion;
  std::vector<Path> at;
  std::optional<std::string> label;
  std::vector<Proof> premises;
  std::string note;

  std::size_t size() const;
  std::size_t height() const;
  /// Number of nodes using `r`.
  std::size_t count(Rule r) const;
};

/// S-expression form:
///   (rule NAME :seq "SEQ" :at ("PATH" ...) :label ID :premises (PROOF ...))
/// `:at`, `:label`, `:premises` and `:note` are optional on input.
std::string to_sexp(const Proof& p);
Proof parse_proof(std::string_view text);

}  // namespace nacll
