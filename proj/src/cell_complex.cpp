#include "tetra/cell_complex.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace tetra {

namespace {

void require_minimal_nontrivial(const WeightVector& w) {
  if (w.is_zero())
    throw std::invalid_argument("the trivial curve has no cell complex");
  if (!is_s_minimal(w))
    throw std::invalid_argument("cell complex is defined for S-minimal curves only");
}

}  // namespace

bool CellComplex::has_vertex(GridPoint p) const {
  return std::binary_search(vertices.begin(), vertices.end(), p);
}

Int CellComplex::vertex_index(GridPoint p) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), p);
  if (it == vertices.end() || *it != p) return -1;
  return it - vertices.begin();
}

Int CellComplex::edge_index(GridPoint corner, bool vertical) const {
  auto key = std::pair{corner, vertical};
  auto it = std::lower_bound(edges.begin(), edges.end(), key,
                             [](const Edge& e, const std::pair<GridPoint, bool>& k) {
                               return std::pair{e.corner, e.vertical} < k;
                             });
  if (it == edges.end() || it->corner != corner || it->vertical != vertical) return -1;
  return it - edges.begin();
}

Monomial CellComplex::vertex_label(GridPoint p) const {
  Monomial m;
  m.e = {p.j, a1 - p.j, a6 - p.i, p.i};
  return m;
}

Monomial CellComplex::edge_label(const Edge& e) const {
  GridPoint head = e.vertical ? GridPoint{e.corner.i, e.corner.j + 1}
                              : GridPoint{e.corner.i + 1, e.corner.j};
  return lcm(vertex_label(e.corner), vertex_label(head));
}

Monomial CellComplex::facet_label(GridPoint corner) const {
  return lcm(vertex_label(corner), vertex_label({corner.i + 1, corner.j + 1}));
}

CellComplex cell_complex(const WeightVector& w) {
  require_minimal_nontrivial(w);
  CellComplex x;
  auto [canonical, sym] = canonicalize_with_symmetry(w);
  x.canonical = canonical;
  x.to_canonical = sym;
  x.a1 = canonical[0];
  x.a6 = canonical[5];
  const Int a2 = canonical[1], a3 = canonical[2], a4 = canonical[3], a5 = canonical[4];

  auto keep = [&](GridPoint p) {
    return p.i >= 0 && p.i <= x.a6 && p.j >= 0 && p.j <= x.a1 &&
           p.i + p.j >= a3 && p.i + p.j <= x.a1 + x.a6 - a4 &&
           p.i - p.j >= a5 - x.a1 && p.i - p.j <= x.a6 - a2;
  };

  for (Int i = 0; i <= x.a6; ++i)
    for (Int j = 0; j <= x.a1; ++j)
      if (keep({i, j})) x.vertices.push_back({i, j});

  for (const GridPoint& p : x.vertices) {
    if (keep({p.i + 1, p.j})) x.edges.push_back({p, false});
    if (keep({p.i, p.j + 1})) x.edges.push_back({p, true});
  }

  for (const GridPoint& p : x.vertices)
    if (keep({p.i + 1, p.j}) && keep({p.i, p.j + 1}) && keep({p.i + 1, p.j + 1}))
      x.facet_corners.push_back(p);

  return x;
}

MonomialIdeal minimal_generators(const WeightVector& w) {
  CellComplex x = cell_complex(w);
  Symmetry back = inverse(x.to_canonical);
  std::vector<Monomial> gens;
  gens.reserve(x.vertices.size());
  for (const GridPoint& p : x.vertices)
    gens.push_back(apply_symmetry(back, x.vertex_label(p)));
  std::sort(gens.begin(), gens.end());
  return MonomialIdeal{std::move(gens)};  // equal degrees, antichain already
}

BettiTable betti_numbers(const WeightVector& w) {
  require_minimal_nontrivial(w);
  WeightVector c = canonicalize(w);
  const Int128 a1 = c[0], a6 = c[5];
  Int128 half = 0, whole = 0;
  for (int i = 1; i <= 4; ++i) {
    Int128 v = c[i];
    half += v * (v + 1) / 2;
    whole += v * (v + 1);
  }
  const Int s = to_int_checked(a1 + a6);
  BettiTable t;
  t.entries[{1, s}] = to_int_checked((a1 + 1) * (a6 + 1) - half);
  t.entries[{2, s + 1}] = to_int_checked(2 * a1 * a6 + a1 + a6 - whole);
  t.entries[{3, s + 2}] = to_int_checked(a1 * a6 - half);
  return t;
}

CellularResolution cellular_differentials(const WeightVector& w) {
  CellularResolution res;
  res.complex = cell_complex(w);
  res.betti = betti_numbers(w);
  const CellComplex& x = res.complex;

  res.d1.rows = static_cast<Int>(x.vertices.size());
  res.d1.cols = static_cast<Int>(x.edges.size());
  for (const auto& e : x.edges) {
    GridPoint tail = e.corner;
    GridPoint head = e.vertical ? GridPoint{tail.i, tail.j + 1}
                                : GridPoint{tail.i + 1, tail.j};
    Monomial label = x.edge_label(e);
    std::vector<MonomialMatrix::Entry> col;
    col.push_back({x.vertex_index(head), +1, label.quotient_by(x.vertex_label(head))});
    col.push_back({x.vertex_index(tail), -1, label.quotient_by(x.vertex_label(tail))});
    std::sort(col.begin(), col.end(),
              [](const auto& l, const auto& r) { return l.row < r.row; });
    res.d1.columns.push_back(std::move(col));
  }

  res.d2.rows = static_cast<Int>(x.edges.size());
  res.d2.cols = static_cast<Int>(x.facet_corners.size());
  for (const GridPoint& p : x.facet_corners) {
    Monomial label = x.facet_label(p);
    auto entry = [&](GridPoint corner, bool vertical, int sign) {
      Int row = x.edge_index(corner, vertical);
      Monomial edge = x.edge_label({corner, vertical});
      return MonomialMatrix::Entry{row, sign, label.quotient_by(edge)};
    };
    std::vector<MonomialMatrix::Entry> col = {
        entry(p, false, +1),                    // bottom
        entry({p.i + 1, p.j}, true, +1),        // right
        entry({p.i, p.j + 1}, false, -1),       // top
        entry(p, true, -1),                     // left
    };
    std::sort(col.begin(), col.end(),
              [](const auto& l, const auto& r) { return l.row < r.row; });
    res.d2.columns.push_back(std::move(col));
  }
  return res;
}

bool composes_to_zero(const MonomialMatrix& d1, const MonomialMatrix& d2) {
  for (const auto& col : d2.columns) {
    std::map<std::pair<Int, Monomial>, Int> acc;
    for (const auto& outer : col) {
      if (outer.row < 0 || outer.row >= static_cast<Int>(d1.columns.size())) return false;
      for (const auto& inner : d1.columns[outer.row])
        acc[{inner.row, inner.factor * outer.factor}] += inner.sign * outer.sign;
    }
    for (const auto& [key, coeff] : acc)
      if (coeff != 0) return false;
  }
  return true;
}

bool buchsbaum_cell_predicate(const WeightVector& w) {
  CellComplex x = cell_complex(w);
  std::vector<int> bound(x.edges.size(), 0);
  for (const GridPoint& p : x.facet_corners) {
    ++bound[x.edge_index(p, false)];
    ++bound[x.edge_index({p.i + 1, p.j}, true)];
    ++bound[x.edge_index({p.i, p.j + 1}, false)];
    ++bound[x.edge_index(p, true)];
  }
  return std::all_of(bound.begin(), bound.end(), [](int n) { return n == 1; });
}

ForbiddenPatterns forbidden_patterns(const WeightVector& w) {
  CellComplex x = cell_complex(w);
  auto has_facet = [&](Int i, Int j) {
    return std::binary_search(x.facet_corners.begin(), x.facet_corners.end(),
                              GridPoint{i, j});
  };
  ForbiddenPatterns p;
  for (const GridPoint& c : x.facet_corners) {
    p.three_in_row |= (has_facet(c.i + 1, c.j) && has_facet(c.i + 2, c.j)) ||
                      (has_facet(c.i, c.j + 1) && has_facet(c.i, c.j + 2));
    p.square_2x2 |= has_facet(c.i + 1, c.j) && has_facet(c.i, c.j + 1) &&
                    has_facet(c.i + 1, c.j + 1);
  }
  return p;
}

}  // namespace tetra
