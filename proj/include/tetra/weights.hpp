#pragma once

#include <array>
#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tetra/arith.hpp"
#include "tetra/monomial.hpp"

namespace tetra {

inline constexpr int kNumLines = 6;

// Line i is cut out by the two variables kLineVars[i]; lines i and 5-i share
// no variable and are disjoint in P^3.
inline constexpr std::array<std::array<int, 2>, kNumLines> kLineVars = {
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

constexpr int opposite_line(int i) { return 5 - i; }

// Multiplicities of the six coordinate lines, kLineVars order.
struct WeightVector {
  std::array<Int, kNumLines> a{};

  WeightVector() = default;
  constexpr WeightVector(Int a1, Int a2, Int a3, Int a4, Int a5, Int a6)
      : a{a1, a2, a3, a4, a5, a6} {}

  Int& operator[](int i) { return a[i]; }
  Int operator[](int i) const { return a[i]; }

  bool is_zero() const;
  Int total() const;
  Int max_entry() const;

  auto operator<=>(const WeightVector&) const = default;
};

// accepts "5,1,3,2,2,5" or "[5, 1, 3, 2, 2, 5]" or whitespace-separated;
// entries must be integers in [0, 10^9]
WeightVector parse_weight_vector(std::string_view text);
std::string to_string(const WeightVector& w);  // "[5, 1, 3, 2, 2, 5]"

// The four faces of the coordinate tetrahedron. Face X lies in the plane
// {x = 0} and contains three of the six lines; trimming a face reduces
// exactly those three weights by one (not below zero) and records the
// basic double link data: the plane variable and the complementary
// complete-intersection form.
enum class Facet : int { A = 0, B = 1, C = 2, D = 3 };

inline constexpr std::array<Facet, 4> kFacets = {Facet::A, Facet::B, Facet::C,
                                                 Facet::D};

struct FacetInfo {
  char tag;                   // 'A'..'D'
  int plane_var;              // variable cutting out the face's plane
  std::array<int, 3> lines;   // the three lines lying in that plane
};

const FacetInfo& facet_info(Facet f);
char facet_tag(Facet f);

// weights of the faces, A..D order: sum of the three contained line weights
std::array<Int, 4> facet_weights(const WeightVector& w);

// first line index of maximal weight
int max_line(const WeightVector& w);
// first face of maximal weight, A..D order
Facet max_facet(const WeightVector& w);
Int max_facet_weight(const WeightVector& w);

// the inequality system allowing the face's trim as a strict descent
bool reduction_applies(const WeightVector& w, Facet f);
// faces whose system holds; rejects the zero vector
std::vector<Facet> applicable_reductions(const WeightVector& w);

// One basic double link step downwards: before = plane_var * after + (form).
struct ReductionStep {
  Facet facet;
  WeightVector before;
  WeightVector after;
  Monomial form;   // complete-intersection partner, degree = facet weight
  int plane_var;   // the adjoined linear form
};

// throws std::invalid_argument when the face's system fails
ReductionStep apply_reduction(const WeightVector& w, Facet f);

bool is_s_minimal(const WeightVector& w);

struct ReductionTrace {
  WeightVector start;
  std::vector<ReductionStep> steps;
  WeightVector result;  // S-minimal (possibly zero)
};

// Greedy descent: while not S-minimal, trim the first face of maximal
// weight. Deterministic; terminates because the total weight drops.
ReductionTrace reduce_to_minimal(const WeightVector& w);

// Permutation of the four coordinate points of the tetrahedron together
// with its induced permutation of the six lines.
struct Symmetry {
  std::array<int, kNumVars> var_map;    // image of each variable
  std::array<int, kNumLines> line_map;  // image of each line
};

const std::array<Symmetry, 24>& symmetries();
Symmetry inverse(const Symmetry& s);
WeightVector apply_symmetry(const Symmetry& s, const WeightVector& w);
Monomial apply_symmetry(const Symmetry& s, const Monomial& m);

// all distinct images under the 24 symmetries, sorted
std::vector<WeightVector> orbit(const WeightVector& w);

// Orbit representative maximizing the reversed tuple (a6,a5,...,a1)
// lexicographically; its last entry is the maximal weight.
WeightVector canonicalize(const WeightVector& w);
// also returns a symmetry s with apply_symmetry(s, w) == canonical form
std::pair<WeightVector, Symmetry> canonicalize_with_symmetry(
    const WeightVector& w);

}  // namespace tetra
