#include "tetra/koszul.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

#include "tetra/errors.hpp"

namespace tetra {

namespace {

constexpr Int kMaxMultidegrees = 1'000'000;

using Multidegree = std::array<Int, kNumVars>;

Multidegree join(const Multidegree& x, const Multidegree& y) {
  Multidegree m;
  for (int v = 0; v < kNumVars; ++v) m[v] = std::max(x[v], y[v]);
  return m;
}

// exact rank by fraction-free integer elimination; entries stay small for
// the 0/+-1 boundary matrices handled here
int matrix_rank(std::vector<std::vector<long long>> m) {
  if (m.empty() || m[0].empty()) return 0;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    for (int r = rank + 1; r < rows; ++r) {
      if (m[r][col] == 0) continue;
      long long hi = m[rank][col], lo = m[r][col];
      long long g = std::gcd(hi, lo);
      for (int c = col; c < cols; ++c)
        m[r][c] = m[r][c] * (hi / g) - m[rank][c] * (lo / g);
    }
    ++rank;
  }
  return rank;
}

// faces of the upper Koszul complex at b, grouped by cardinality 0..4;
// face sets are encoded as variable bitmasks
struct KoszulComplex {
  std::array<std::vector<int>, kNumVars + 1> faces;
  bool void_complex = true;
};

KoszulComplex koszul_complex(const MonomialIdeal& ideal, const Multidegree& b) {
  KoszulComplex k;
  for (int mask = 0; mask < (1 << kNumVars); ++mask) {
    Monomial m;
    bool inside = true;
    for (int v = 0; v < kNumVars && inside; ++v) {
      Int sub = (mask >> v) & 1;
      inside = b[v] >= sub;
      m.e[v] = b[v] - sub;
    }
    if (inside && ideal.contains(m))
      k.faces[std::popcount(static_cast<unsigned>(mask))].push_back(mask);
  }
  k.void_complex = k.faces[0].empty();
  return k;
}

// reduced homology dimensions in simplicial dims -1..2, exact over Q
std::array<Int, 4> reduced_homology(const KoszulComplex& k) {
  if (k.void_complex) return {0, 0, 0, 0};
  // boundary ranks: d[c] maps c-subsets to (c-1)-subsets, c = 1..4
  std::array<int, kNumVars + 1> brank{};
  for (int c = 1; c <= kNumVars; ++c) {
    const auto& sources = k.faces[c];
    const auto& targets = k.faces[c - 1];
    if (sources.empty() || targets.empty()) continue;
    std::vector<std::vector<long long>> mat(
        targets.size(), std::vector<long long>(sources.size(), 0));
    for (std::size_t col = 0; col < sources.size(); ++col) {
      int mask = sources[col];
      int sign = 1;
      for (int v = 0; v < kNumVars; ++v) {
        if (!((mask >> v) & 1)) continue;
        int sub = mask & ~(1 << v);
        auto it = std::lower_bound(targets.begin(), targets.end(), sub);
        mat[it - targets.begin()][col] = sign;
        sign = -sign;
      }
    }
    brank[c] = matrix_rank(std::move(mat));
  }
  std::array<Int, 4> h{};
  for (int dim = -1; dim <= 2; ++dim) {
    Int chains = static_cast<Int>(k.faces[dim + 1].size());
    h[dim + 1] = chains - brank[dim + 1] - brank[dim + 2];
  }
  return h;
}

}  // namespace

BettiTable GradedBetti::by_total_degree() const {
  BettiTable t;
  for (const auto& [key, rank] : ranks) {
    const auto& [i, b] = key;
    Int total = b[0] + b[1] + b[2] + b[3];
    t.entries[{i, total}] += rank;
  }
  return t;
}

Int GradedBetti::total(int i) const {
  Int sum = 0;
  for (const auto& [key, rank] : ranks)
    if (key.first == i) sum += rank;
  return sum;
}

GradedBetti graded_betti(const MonomialIdeal& ideal, const OracleCaps& caps) {
  GradedBetti out;
  if (ideal.is_zero()) return out;
  if (static_cast<Int>(ideal.gens.size()) > caps.max_betti_generators)
    throw CapExceededError("betti-generators",
                           std::to_string(ideal.gens.size()) + " generators > " +
                               std::to_string(caps.max_betti_generators));

  // candidate multidegrees: generator exponents closed under pairwise join
  std::set<Multidegree> degs;
  for (const Monomial& g : ideal.gens) degs.insert(g.e);
  std::vector<Multidegree> fresh(degs.begin(), degs.end());
  while (!fresh.empty()) {
    std::vector<Multidegree> next;
    for (const Multidegree& x : fresh)
      for (const Multidegree& y : degs) {
        Multidegree j = join(x, y);
        if (degs.insert(j).second) next.push_back(j);
      }
    if (static_cast<Int>(degs.size()) > kMaxMultidegrees)
      throw CapExceededError("betti-multidegrees", "lcm closure too large");
    fresh = std::move(next);
  }

  for (const Multidegree& b : degs) {
    auto h = reduced_homology(koszul_complex(ideal, b));
    for (int dim = -1; dim <= 2; ++dim)
      if (h[dim + 1] != 0) out.ranks[{dim + 2, b}] = h[dim + 1];
  }
  return out;
}

}  // namespace tetra
