#pragma once

#include <map>
#include <string>
#include <utility>

#include "tetra/arith.hpp"

namespace tetra {

// Graded Betti numbers collapsed to total degree. Keys are
// (homological degree i >= 1, internal degree); i = 1 counts generators.
struct BettiTable {
  std::map<std::pair<int, Int>, Int> entries;

  Int rank(int i) const;  // sum over internal degrees

  bool operator==(const BettiTable&) const = default;
};

std::string to_string(const BettiTable& t);

}  // namespace tetra
