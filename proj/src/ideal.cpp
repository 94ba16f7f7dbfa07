#include "tetra/ideal.hpp"

#include <algorithm>
#include <stdexcept>

#include "tetra/errors.hpp"

namespace tetra {

namespace {
// keeps intersection blowup and line powers desk-sized
constexpr Int kMaxOracleGeneratorProduct = 10'000'000;
constexpr Int kMaxLinePower = 1'000'000;
}  // namespace

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens.begin(), gens.end(),
                     [&](const Monomial& g) { return g.divides(m); });
}

MonomialIdeal make_ideal(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> minimal;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j)
      redundant = i != j && gens[j].divides(gens[i]);
    if (!redundant) minimal.push_back(gens[i]);
  }
  return MonomialIdeal{std::move(minimal)};
}

MonomialIdeal power_ideal(int u, int v, Int n) {
  if (u == v || u < 0 || v < 0 || u >= kNumVars || v >= kNumVars)
    throw std::invalid_argument("power_ideal needs two distinct variables");
  if (n < 0) throw std::invalid_argument("negative power");
  if (n > kMaxLinePower)
    throw CapExceededError("line-power", "exponent " + std::to_string(n));
  std::vector<Monomial> gens;
  gens.reserve(static_cast<std::size_t>(n) + 1);
  for (Int k = 0; k <= n; ++k) {
    Monomial m;
    m.e[u] = k;
    m.e[v] = n - k;
    gens.push_back(m);
  }
  return MonomialIdeal{std::move(gens)};  // already a sorted antichain
}

MonomialIdeal intersect(const MonomialIdeal& x, const MonomialIdeal& y) {
  if (x.is_zero() || y.is_zero()) return {};
  Int products = static_cast<Int>(x.gens.size()) * static_cast<Int>(y.gens.size());
  if (products > kMaxOracleGeneratorProduct)
    throw CapExceededError("intersection-size", std::to_string(products) + " lcm pairs");
  std::vector<Monomial> gens;
  gens.reserve(x.gens.size() * y.gens.size());
  for (const Monomial& g : x.gens)
    for (const Monomial& h : y.gens) gens.push_back(lcm(g, h));
  return make_ideal(std::move(gens));
}

MonomialIdeal tetrahedral_ideal(const WeightVector& w) {
  MonomialIdeal ideal{{Monomial::one()}};
  for (int line = 0; line < kNumLines; ++line) {
    if (w[line] == 0) continue;
    ideal = intersect(ideal, power_ideal(kLineVars[line][0], kLineVars[line][1], w[line]));
  }
  return ideal;
}

MonomialIdeal apply_symmetry(const Symmetry& s, const MonomialIdeal& ideal) {
  std::vector<Monomial> gens;
  gens.reserve(ideal.gens.size());
  for (const Monomial& g : ideal.gens) gens.push_back(apply_symmetry(s, g));
  std::sort(gens.begin(), gens.end());
  return MonomialIdeal{std::move(gens)};
}

bool tetrahedral_contains(const WeightVector& w, const Monomial& m) {
  for (int line = 0; line < kNumLines; ++line)
    if (m.e[kLineVars[line][0]] + m.e[kLineVars[line][1]] < w[line]) return false;
  return true;
}

bool bdl_check(const ReductionStep& step) {
  MonomialIdeal before = tetrahedral_ideal(step.before);
  MonomialIdeal after = tetrahedral_ideal(step.after);
  Monomial g = Monomial::variable(step.plane_var);
  std::vector<Monomial> gens;
  gens.reserve(after.gens.size() + 1);
  for (const Monomial& m : after.gens) gens.push_back(m * g);
  gens.push_back(step.form);
  return make_ideal(std::move(gens)) == before;
}

}  // namespace tetra
