#include "tetra/betti_table.hpp"

namespace tetra {

Int BettiTable::rank(int i) const {
  Int sum = 0;
  for (const auto& [key, value] : entries)
    if (key.first == i) sum += value;
  return sum;
}

std::string to_string(const BettiTable& t) {
  std::string s;
  for (const auto& [key, value] : t.entries) {
    if (!s.empty()) s += ", ";
    s += "b" + std::to_string(key.first) + "[" + std::to_string(key.second) +
         "] = " + std::to_string(value);
  }
  return s.empty() ? "empty" : s;
}

}  // namespace tetra
