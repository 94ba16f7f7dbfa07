#include "tetra/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace tetra {

Monomial Monomial::variable(int v) {
  if (v < 0 || v >= kNumVars) throw std::invalid_argument("variable index out of range");
  Monomial m;
  m.e[v] = 1;
  return m;
}

bool Monomial::divides(const Monomial& m) const {
  for (int v = 0; v < kNumVars; ++v)
    if (e[v] > m.e[v]) return false;
  return true;
}

Monomial Monomial::quotient_by(const Monomial& d) const {
  Monomial q;
  for (int v = 0; v < kNumVars; ++v) {
    q.e[v] = e[v] - d.e[v];
    if (q.e[v] < 0) throw std::invalid_argument("quotient by a non-divisor");
  }
  return q;
}

Monomial operator*(const Monomial& x, const Monomial& y) {
  Monomial p;
  for (int v = 0; v < kNumVars; ++v) p.e[v] = x.e[v] + y.e[v];
  return p;
}

Monomial lcm(const Monomial& x, const Monomial& y) {
  Monomial m;
  for (int v = 0; v < kNumVars; ++v) m.e[v] = std::max(x.e[v], y.e[v]);
  return m;
}

std::string to_string(const Monomial& m) {
  if (m.is_one()) return "1";
  std::string s;
  for (int v = 0; v < kNumVars; ++v) {
    if (m.e[v] == 0) continue;
    if (!s.empty()) s += '*';
    s += kVarNames[v];
    if (m.e[v] > 1) s += '^' + std::to_string(m.e[v]);
  }
  return s;
}

}  // namespace tetra
