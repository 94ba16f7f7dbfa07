#pragma once

#include <vector>

#include "tetra/monomial.hpp"
#include "tetra/weights.hpp"

namespace tetra {

// Monomial ideal given by its unique minimal generating set, kept sorted.
// The zero ideal is the empty set; the unit ideal is {1}.
struct MonomialIdeal {
  std::vector<Monomial> gens;

  bool is_zero() const { return gens.empty(); }
  bool is_unit() const { return gens.size() == 1 && gens[0].is_one(); }
  bool contains(const Monomial& m) const;

  bool operator==(const MonomialIdeal&) const = default;
};

// sorts and drops generators divisible by another; idempotent
MonomialIdeal make_ideal(std::vector<Monomial> gens);

// (x_u, x_v)^n; the unit ideal for n = 0
MonomialIdeal power_ideal(int u, int v, Int n);

// pairwise lcms, minimalized
MonomialIdeal intersect(const MonomialIdeal& x, const MonomialIdeal& y);

// intersection of the six line-power ideals
MonomialIdeal tetrahedral_ideal(const WeightVector& w);

MonomialIdeal apply_symmetry(const Symmetry& s, const MonomialIdeal& ideal);

// definitional membership: every line's variable pair reaches its weight
bool tetrahedral_contains(const WeightVector& w, const Monomial& m);

// checks plane_var * I(after) + (form) == I(before) generator by generator
bool bdl_check(const ReductionStep& step);

}  // namespace tetra
