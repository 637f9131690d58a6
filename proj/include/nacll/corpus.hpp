// SPDX-License-Identifier: Apache-2.0
//
// Reproduction cases: line-oriented files, one `key value` per line.
//
//   case NAME          starts a case; later keys belong to it
//   source TEXT        where the case comes from
//   system classical | int | int-plus
//   zero yes|no        0-extension (intuitionistic)
//   sig PATH           signature file, relative to the case file
//   sequent SEQ
//   proof PATH         proof file, relative to the case file
//   mode strict|modulo classical checking mode (default strict)
//   expect Proved | Exhausted | BudgetExceeded | CheckOk | CheckFails
//   depth N / contractions K / visited N
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nacll/search.hpp"

namespace nacll {

struct CorpusCase {
  std::string name;
  std::string source;
  std::string file;  // where it was read from
  std::string system = "classical";
  bool zero = false;
  std::string sig_path;
  std::optional<std::string> sequent;
  std::string proof_path;
  std::string mode = "strict";
  std::string expect;
  Budget budget;
};

struct CaseResult {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
  double millis = 0;
  std::string detail;
};

std::vector<CorpusCase> parse_cases(const std::string& text, const std::string& file);
std::vector<CorpusCase> load_cases(const std::string& dir);

CaseResult run_case(const CorpusCase& c);
/// Runs cases concurrently; results come back in input order.
std::vector<CaseResult> run_corpus(const std::vector<CorpusCase>& cases);

std::string format_report(const std::vector<CaseResult>& results);

}  // namespace nacll
