#pragma once

#include <array>
#include <compare>
#include <string>

#include "tetra/arith.hpp"

namespace tetra {

inline constexpr int kNumVars = 4;
inline constexpr std::array<char, kNumVars> kVarNames = {'a', 'b', 'c', 'd'};

// Monomial in k[a,b,c,d], stored as its exponent vector.
struct Monomial {
  std::array<Int, kNumVars> e{};

  static Monomial one() { return {}; }
  static Monomial variable(int v);

  Int degree() const { return e[0] + e[1] + e[2] + e[3]; }
  bool is_one() const { return degree() == 0; }
  bool divides(const Monomial& m) const;
  // this / d; requires d.divides(*this)
  Monomial quotient_by(const Monomial& d) const;

  auto operator<=>(const Monomial&) const = default;
};

Monomial operator*(const Monomial& x, const Monomial& y);
Monomial lcm(const Monomial& x, const Monomial& y);

// "a^2*b*d", "1" for the unit
std::string to_string(const Monomial& m);

}  // namespace tetra
