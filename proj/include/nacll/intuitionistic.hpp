// SPDX-License-Identifier: Apache-2.0
//
// Two-sided intuitionistic systems. There is no free structural
// rearrangement here: every shape is literal.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nacll/classical.hpp"
#include "nacll/proof.hpp"
#include "nacll/signature.hpp"

namespace nacll {

enum class ISystem {
  ALL,       // associativity rules A1L and A2R only
  ALL_PLUS,  // all six associativity rules
};

struct IConfig {
  ISystem system = ISystem::ALL;
  bool zero = false;  // admit 0 and its left rule
};

const char* system_name(IConfig cfg);
bool is_intuitionistic_rule(Rule r);
bool rule_in_system(Rule r, IConfig cfg);

/// One backward rule application: the premises a rule produces from a goal.
struct IInstance {
  Rule rule;
  std::vector<Path> at;
  std::optional<std::string> label;
  std::vector<Sequent> premises;
};

/// Every instance of `rule` concluding `goal` (restricted to `at` when
/// given). BangC is not enumerated here; see `contraction_instances`.
std::vector<IInstance> instances_i(Rule rule, const Sequent& goal, const std::vector<Path>& at,
                                   const std::optional<std::string>& label, const Signature& sig, IConfig cfg,
                                   std::string* why = nullptr);

/// BangC instances: a licensed !-structure copied next to some node.
std::vector<IInstance> contraction_instances(const Sequent& goal, const Signature& sig);

/// All backward instances of every rule of the system except BangC.
std::vector<IInstance> all_instances_i(const Sequent& goal, const Signature& sig, IConfig cfg);

std::optional<std::string> check_step_i(Rule rule, const Sequent& conclusion, const std::vector<Path>& at,
                                        const std::optional<std::string>& label,
                                        const std::vector<Sequent>& premises, const Signature& sig, IConfig cfg);

std::optional<Violation> check_proof_i(const Proof& p, const Signature& sig, IConfig cfg);

}  // namespace nacll
