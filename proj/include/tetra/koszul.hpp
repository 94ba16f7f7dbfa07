#pragma once

#include <array>
#include <map>
#include <utility>

#include "tetra/betti_table.hpp"
#include "tetra/hilbert.hpp"
#include "tetra/ideal.hpp"

namespace tetra {

// Multigraded Betti numbers of R/I computed from simplicial homology of the
// upper Koszul complexes K^b = { S subset of variables : x^b / x^S in I },
// one per candidate multidegree b. Candidates are the closure of the
// generator exponents under componentwise max. Homological degree i >= 1
// counts generators (i = 1), first syzygies (i = 2), and so on; the rank at
// (i, b) is dim of reduced homology in dimension i - 2 of K^b, computed by
// exact integer rank of the boundary matrices.
struct GradedBetti {
  std::map<std::pair<int, std::array<Int, kNumVars>>, Int> ranks;

  BettiTable by_total_degree() const;
  Int total(int i) const;
};

// throws CapExceededError("betti-generators") past caps.max_betti_generators
GradedBetti graded_betti(const MonomialIdeal& ideal,
                         const OracleCaps& caps = {});

}  // namespace tetra
