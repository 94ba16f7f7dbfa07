#include "tetra/hilbert.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace tetra {

namespace {

void check_degree(Int t, const OracleCaps& caps) {
  if (t < 0) throw std::invalid_argument("negative degree");
  if (t > caps.max_hilbert_degree)
    throw CapExceededError("hilbert-degree", "degree " + std::to_string(t) +
                                                 " > " + std::to_string(caps.max_hilbert_degree));
}

template <class Member>
Int count_standard_monomials(Int t, Member&& in_ideal) {
  Int count = 0;
  Monomial m;
  for (Int e0 = 0; e0 <= t; ++e0)
    for (Int e1 = 0; e1 + e0 <= t; ++e1)
      for (Int e2 = 0; e2 + e1 + e0 <= t; ++e2) {
        m.e = {e0, e1, e2, t - e0 - e1 - e2};
        if (!in_ideal(m)) ++count;
      }
  return count;
}

}  // namespace

Int hilbert_function(const MonomialIdeal& ideal, Int t, const OracleCaps& caps) {
  check_degree(t, caps);
  return count_standard_monomials(t, [&](const Monomial& m) { return ideal.contains(m); });
}

Int tetrahedral_hilbert_function(const WeightVector& w, Int t, const OracleCaps& caps) {
  check_degree(t, caps);
  return count_standard_monomials(t, [&](const Monomial& m) { return tetrahedral_contains(w, m); });
}

HilbertData fit_hilbert_tail(const std::function<Int(Int)>& hf, Int window,
                             const OracleCaps& caps) {
  if (window < 2) throw std::invalid_argument("fit window must be at least 2");
  HilbertData data;
  auto value = [&](Int t) {
    auto it = data.values.find(t);
    if (it != data.values.end()) return it->second;
    check_degree(t, caps);
    return data.values[t] = hf(t);
  };
  for (Int start = 0;; ++start) {
    Int base = value(start);
    Int slope = value(start + 1) - base;
    bool fits = true;
    for (Int k = 2; k < window && fits; ++k)
      fits = value(start + k) == base + slope * k;
    if (fits) {
      data.stable_from = start;
      data.degree = slope;
      data.genus = 1 - (base - slope * start);
      return data;
    }
  }
}

HilbertData hilbert_polynomial(const MonomialIdeal& ideal, Int window,
                               const OracleCaps& caps) {
  return fit_hilbert_tail([&](Int t) { return hilbert_function(ideal, t, caps); },
                          window, caps);
}

HilbertData curve_hilbert_data(const WeightVector& w, const OracleCaps& caps) {
  Int window = std::max<Int>(4, w.total());
  return fit_hilbert_tail(
      [&](Int t) { return tetrahedral_hilbert_function(w, t, caps); }, window, caps);
}

}  // namespace tetra
