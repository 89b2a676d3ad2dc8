#pragma once

#include <ostream>

#include "singlattice/arith.hpp"
#include "singlattice/graph.hpp"

namespace singlattice {

// Readable gtest output for cycles.
inline void PrintTo(const Cycle& c, std::ostream* os) {
  *os << '(';
  for (std::size_t i = 0; i < c.size(); ++i) *os << (i ? "," : "") << to_string(c[i]);
  *os << ')';
}

}  // namespace singlattice
