// SPDX-License-Identifier: Apache-2.0
//
// Bounded backward cut-free proof search.
#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "nacll/intuitionistic.hpp"
#include "nacll/proof.hpp"
#include "nacll/signature.hpp"

namespace nacll {

struct Budget {
  int max_depth = 14;           // rule applications along a branch
  int max_contractions = 2;     // QC / BangC applications along a branch
  std::size_t max_visited = 200000;  // distinct states
  /// Identify classical states up to structural equivalence (canonical
  /// form). When off they are identified only by printed form. The
  /// intuitionistic search always uses printed form.
  bool memo = true;
};

struct SearchOutcome {
  enum class Status { Proved, Exhausted, BudgetExceeded };
  Status status = Status::BudgetExceeded;
  std::optional<Proof> proof;  // set when Proved; passes the matching checker
  std::size_t visited = 0;
  std::size_t truncated = 0;  // states left unexpanded
  std::string report;
};

const char* status_name(SearchOutcome::Status s);

/// Searches modulo structural equivalence; the proof checks in modulo mode.
SearchOutcome prove_classical(const Sequent& goal, const Signature& sig, const Budget& budget = {});

SearchOutcome prove_intuitionistic(const Sequent& goal, const Signature& sig, IConfig cfg,
                                   const Budget& budget = {});

}  // namespace nacll
