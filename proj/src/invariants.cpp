#include "tetra/invariants.hpp"

#include <algorithm>
#include <stdexcept>

namespace tetra {

namespace {

constexpr Int kMaxFormulaEntry = 1'000'000'000;

void validate_entries(const WeightVector& w) {
  for (int i = 0; i < kNumLines; ++i)
    if (w[i] < 0 || w[i] > kMaxFormulaEntry)
      throw std::invalid_argument("weight entry out of the supported range");
}

void require_minimal_nontrivial(const WeightVector& w) {
  if (w.is_zero()) throw std::invalid_argument("the trivial curve is excluded");
  if (!is_s_minimal(w)) throw std::invalid_argument("curve is not S-minimal");
}

// sum of k^2 for k = 1..n
Int128 square_sum(Int128 n) { return n < 1 ? 0 : n * (n + 1) * (2 * n + 1) / 6; }

}  // namespace

Int degree(const WeightVector& w) {
  validate_entries(w);
  Int128 sum = 0;
  for (int i = 0; i < kNumLines; ++i) sum += binom2(Int128{w[i]} + 1);
  return to_int_checked(sum);
}

Int genus_minimal(const WeightVector& w) {
  validate_entries(w);
  require_minimal_nontrivial(w);
  WeightVector c = canonicalize(w);
  Int128 s = Int128{c[0]} + c[5];
  Int128 deg = 0;
  for (int i = 0; i < kNumLines; ++i) deg += binom2(Int128{c[i]} + 1);
  return to_int_checked(deg * (s - 1) + 1 - binom3(s + 2));
}

Int genus(const WeightVector& w, const OracleCaps& caps) {
  validate_entries(w);
  if (w.is_zero())
    throw std::invalid_argument("genus of the empty curve is undefined");
  if (is_s_minimal(w)) return genus_minimal(w);
  return curve_hilbert_data(w, caps).genus;
}

Int initial_degree(const WeightVector& w) {
  validate_entries(w);
  require_minimal_nontrivial(w);
  WeightVector c = canonicalize(w);
  return to_int_checked(Int128{c[0]} + c[5]);
}

std::vector<WeightVector> enumerate_minimal(Int m) {
  if (m < 0) throw std::invalid_argument("negative bound");
  std::vector<WeightVector> out;
  for (Int a1 = 1; a1 <= m; ++a1)
    for (Int a2 = 0; a2 < a1; ++a2)
      for (Int a3 = 0; a3 < a1; ++a3)
        for (Int a4 = 0; a4 < a1; ++a4)
          for (Int a5 = 0; a5 < a1; ++a5)
            if (a3 + a5 < a1 && a2 + a4 < a1 && a4 + a5 < m && a2 + a3 < m)
              out.push_back({a1, a2, a3, a4, a5, m});
  return out;
}

Int count_minimal(Int m) {
  if (m < 0) throw std::invalid_argument("negative bound");
  Int128 total = 0;
  for (Int a1 = 0; a1 <= m; ++a1)
    for (Int a2 = 0; a2 < a1; ++a2)
      for (Int a5 = 0; a5 < a1; ++a5)
        total += Int128{std::min(a1 - a5, m - a2)} * std::min(a1 - a2, m - a5);
  return to_int_checked(total);
}

Int count_minimal_lower_bound(Int m) {
  if (m < 0) throw std::invalid_argument("negative bound");
  // both minima are at least a1 - max{a2, a5}; summing the square over a5
  // splits at a2
  Int128 total = 0;
  for (Int a1 = 0; a1 <= m; ++a1)
    for (Int a2 = 0; a2 < a1; ++a2)
      total += Int128{a2} * (a1 - a2) * (a1 - a2) + square_sum(a1 - a2);
  return to_int_checked(total);
}

Int count_minimal_estimate(Int m) {
  if (m < 0) throw std::invalid_argument("negative bound");
  // the a1 - min{a2, a5} variant; overshoots the true count from m = 2 on
  Int128 total = 0;
  for (Int a1 = 0; a1 <= m; ++a1)
    for (Int a2 = 0; a2 < a1; ++a2)
      total += square_sum(a1) - square_sum(a1 - a2) +
               Int128{a1 - a2} * (a1 - a2) * (a1 - a2);
  return to_int_checked(total);
}

}  // namespace tetra
