#pragma once

#include <compare>
#include <vector>

#include "tetra/betti_table.hpp"
#include "tetra/ideal.hpp"
#include "tetra/weights.hpp"

namespace tetra {

struct GridPoint {
  Int i = 0, j = 0;
  auto operator<=>(const GridPoint&) const = default;
};

// Planar square grid supporting the minimal free resolution of an S-minimal
// nontrivial curve, built in the canonical position (a6 maximal). Vertex
// (i,j), 0 <= i <= a6 and 0 <= j <= a1, carries the monomial
// a^j b^(a1-j) c^(a6-i) d^i and is kept when
//   a3 <= i + j <= a1 + a6 - a4   and   a5 - a1 <= i - j <= a6 - a2.
// Edges are unit segments with both endpoints kept, facets unit squares
// with all four corners kept. Faces are listed lexicographically by the
// (i,j) of their lower-left corner, horizontal edge before vertical.
struct CellComplex {
  WeightVector canonical;
  Symmetry to_canonical;  // applied to the input to reach canonical
  Int a1 = 0, a6 = 0;

  std::vector<GridPoint> vertices;
  struct Edge {
    GridPoint corner;
    bool vertical;  // false: corner -> (i+1,j); true: corner -> (i,j+1)
  };
  std::vector<Edge> edges;
  std::vector<GridPoint> facet_corners;  // lower-left corners of kept squares

  bool has_vertex(GridPoint p) const;
  Int vertex_index(GridPoint p) const;   // position in `vertices`, -1 if absent
  Int edge_index(GridPoint corner, bool vertical) const;

  Monomial vertex_label(GridPoint p) const;          // in canonical coordinates
  Monomial edge_label(const Edge& e) const;          // lcm of endpoints
  Monomial facet_label(GridPoint corner) const;      // lcm of four corners
};

// throws std::invalid_argument unless w is S-minimal and nonzero
CellComplex cell_complex(const WeightVector& w);

// vertex monomials mapped back to the input coordinates
MonomialIdeal minimal_generators(const WeightVector& w);

// closed-form table: rank b1 in degree s, b2 in s+1, b3 in s+2, s = a1+a6
BettiTable betti_numbers(const WeightVector& w);

// Signed monomial matrix, column-major; rows index the target basis.
struct MonomialMatrix {
  struct Entry {
    Int row;
    int sign;  // +1 or -1
    Monomial factor;
  };
  Int rows = 0, cols = 0;
  std::vector<std::vector<Entry>> columns;
};

// Differentials of the cellular resolution in the listed face order:
// d1 maps edges to vertices (head +, tail -), d2 maps facets to edges
// (bottom and right +, top and left -). d1 * d2 = 0.
struct CellularResolution {
  CellComplex complex;
  BettiTable betti;
  MonomialMatrix d1, d2;
};

CellularResolution cellular_differentials(const WeightVector& w);

// true when the composite has every column identically zero
bool composes_to_zero(const MonomialMatrix& d1, const MonomialMatrix& d2);

// every edge lies on exactly one facet
bool buchsbaum_cell_predicate(const WeightVector& w);

struct ForbiddenPatterns {
  bool three_in_row = false;  // three consecutive facets in a row or column
  bool square_2x2 = false;    // four facets forming a 2x2 block
};

ForbiddenPatterns forbidden_patterns(const WeightVector& w);

}  // namespace tetra
