// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "nacll/proof.hpp"
#include "nacll/signature.hpp"

namespace testsupport {

inline std::string slurp(const std::string& rel) {
  std::ifstream in(std::string(NACLL_CORPUS_DIR) + "/" + rel);
  if (!in) throw std::runtime_error("cannot open " + rel);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline nacll::Proof golden(const std::string& name) { return nacll::parse_proof(slurp("proofs/" + name)); }
inline nacll::Signature sig_file(const std::string& name) { return nacll::load_signature(slurp("sigs/" + name)); }

}  // namespace testsupport
