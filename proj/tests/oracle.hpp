// SPDX-License-Identifier: Apache-2.0
// Breadth-first closure of top-level exchange and reassociation. Shares no
// code with the designator.
#pragma once

#include <deque>
#include <set>
#include <string>

#include "nacll/syntax.hpp"

namespace testsupport {

inline std::vector<nacll::Structure> closure_moves(const nacll::Structure& s) {
  using nacll::Structure;
  std::vector<Structure> out;
  if (!s.is_pair()) return out;
  Structure x = s.left(), y = s.right();
  out.push_back(Structure::pair(y, x));
  if (y.is_pair()) out.push_back(Structure::pair(Structure::pair(x, y.left()), y.right()));
  if (x.is_pair()) out.push_back(Structure::pair(x.left(), Structure::pair(x.right(), y)));
  return out;
}

/// Printed forms of every structure ~-reachable from `s`.
inline std::set<std::string> closure(const nacll::Structure& s, std::vector<nacll::Structure>* members = nullptr) {
  std::set<std::string> seen{s.text()};
  std::deque<nacll::Structure> queue{s};
  if (members) members->push_back(s);
  while (!queue.empty()) {
    nacll::Structure cur = queue.front();
    queue.pop_front();
    for (auto& next : closure_moves(cur)) {
      if (!seen.insert(next.text()).second) continue;
      if (members) members->push_back(next);
      queue.push_back(std::move(next));
    }
  }
  return seen;
}

inline bool oracle_equivalent(const nacll::Structure& s, const nacll::Structure& t) {
  return closure(s).count(t.text()) != 0;
}

}  // namespace testsupport
