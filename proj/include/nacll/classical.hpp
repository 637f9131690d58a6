// SPDX-License-Identifier: Apache-2.0
//
// Checking one-sided classical derivations.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nacll/proof.hpp"
#include "nacll/signature.hpp"

namespace nacll {

enum class Mode { Strict, Modulo };

/// Location is the list of premise indices from the root to the bad node.
struct Violation {
  std::string message;
  std::vector<std::size_t> location;

  std::string where() const;
};

/// The instance a step was matched against. `conclusion` is the designated
/// shape of the node's conclusion (equal to it in strict mode, equivalent in
/// modulo mode); `premises` are the exact premise shapes the rule produces.
struct StepInstance {
  Structure conclusion;
  std::vector<Path> at;
  std::vector<Structure> premises;
  /// Principal positions in the node's own conclusion, when expressible.
  std::vector<Path> source;
};

struct StepResult {
  std::optional<StepInstance> instance;
  std::string error;  // set when no instance matched

  bool ok() const { return instance.has_value(); }
};

StepResult check_step(Rule rule, const Sequent& conclusion, const std::vector<Path>& at,
                      const std::optional<std::string>& label, const std::vector<Sequent>& premises,
                      const Signature& sig, Mode mode);

/// Modulo-mode backward instances of `rule` on `conclusion`. Rules whose
/// instances are read off their premises (Cut, QC) and the explicit
/// structural rules yield nothing.
std::vector<StepInstance> backward_instances(Rule rule, const Structure& conclusion, const Signature& sig);

std::optional<Violation> check_proof(const Proof& p, const Signature& sig, Mode mode);

/// Inserts the E/A1/A2 steps a modulo-mode proof leaves implicit. The input
/// must check in modulo mode; the output checks in strict mode.
Proof expand_to_strict(const Proof& p, const Signature& sig);

/// Drops E/A1/A2 nodes, splicing their premise in their place.
Proof erase_structural(const Proof& p);

}  // namespace nacll
