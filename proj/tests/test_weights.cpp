#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "tetra/weights.hpp"

using namespace tetra;

namespace {

WeightVector wv(Int a1, Int a2, Int a3, Int a4, Int a5, Int a6) {
  return WeightVector(a1, a2, a3, a4, a5, a6);
}

}  // namespace

TEST_CASE("line tables") {
  CHECK(kLineVars[0] == std::array<int, 2>{0, 1});
  CHECK(kLineVars[5] == std::array<int, 2>{2, 3});
  for (int i = 0; i < kNumLines; ++i) {
    CHECK(opposite_line(opposite_line(i)) == i);
    // Opposite lines share no variable.
    const auto& p = kLineVars[i];
    const auto& q = kLineVars[opposite_line(i)];
    for (int u : p)
      for (int v : q) CHECK(u != v);
  }
}

TEST_CASE("facet tables") {
  CHECK(facet_info(Facet::A).plane_var == 0);
  CHECK(facet_info(Facet::B).plane_var == 1);
  CHECK(facet_info(Facet::C).plane_var == 2);
  CHECK(facet_info(Facet::D).plane_var == 3);
  for (Facet f : kFacets) {
    const auto& info = facet_info(f);
    // A facet holds exactly the three lines lying in its plane.
    for (int line : info.lines)
      CHECK((kLineVars[line][0] == info.plane_var ||
             kLineVars[line][1] == info.plane_var));
  }
  CHECK(facet_tag(Facet::A) == 'A');
  CHECK(facet_tag(Facet::D) == 'D');
}

TEST_CASE("facet weights") {
  CHECK(facet_weights(wv(4, 2, 2, 1, 1, 4)) == std::array<Int, 4>{8, 6, 7, 7});
  CHECK(facet_weights(wv(1, 0, 1, 1, 0, 1)) == std::array<Int, 4>{2, 2, 2, 2});
  CHECK(facet_weights(wv(0, 0, 0, 0, 0, 0)) == std::array<Int, 4>{0, 0, 0, 0});
  CHECK(max_facet_weight(wv(4, 2, 2, 1, 1, 4)) == 8);
}

TEST_CASE("first maximum scans") {
  CHECK(max_line(wv(6, 0, 8, 1, 0, 4)) == 2);
  CHECK(max_line(wv(2, 2, 0, 0, 0, 0)) == 0);
  CHECK(max_line(wv(0, 0, 0, 0, 0, 0)) == 0);
  CHECK(max_facet(wv(5, 1, 3, 2, 2, 5)) == Facet::D);
  CHECK(max_facet(wv(1, 0, 1, 1, 0, 1)) == Facet::A);
}

TEST_CASE("applicable reductions") {
  CHECK(applicable_reductions(wv(4, 2, 2, 1, 1, 4)) ==
        std::vector<Facet>{Facet::A});
  CHECK(applicable_reductions(wv(1, 0, 0, 0, 0, 0)) ==
        std::vector<Facet>{Facet::A, Facet::B});
  CHECK(applicable_reductions(wv(1, 0, 1, 1, 0, 1)) ==
        std::vector<Facet>{Facet::A, Facet::B, Facet::C, Facet::D});
  CHECK_THROWS_AS((void)applicable_reductions(wv(0, 0, 0, 0, 0, 0)),
                  std::invalid_argument);
}

TEST_CASE("apply_reduction") {
  ReductionStep step = apply_reduction(wv(4, 2, 2, 1, 1, 4), Facet::A);
  CHECK(step.after == wv(3, 1, 1, 1, 1, 4));
  CHECK(step.form.e == std::array<Int, 4>{0, 4, 2, 2});
  CHECK(step.plane_var == 0);
  CHECK(step.form.degree() == facet_weights(step.before)[0]);

  step = apply_reduction(wv(1, 0, 1, 1, 0, 1), Facet::A);
  CHECK(step.after == wv(0, 0, 0, 1, 0, 1));
  CHECK(step.form.e == std::array<Int, 4>{0, 1, 0, 1});

  CHECK_THROWS_AS((void)apply_reduction(wv(3, 1, 1, 1, 1, 4), Facet::A),
                  std::invalid_argument);
}

TEST_CASE("is_s_minimal") {
  CHECK(is_s_minimal(wv(0, 0, 0, 0, 0, 0)));
  CHECK(is_s_minimal(wv(5, 1, 2, 2, 1, 4)));
  CHECK(is_s_minimal(wv(1, 0, 0, 0, 0, 1)));
  CHECK_FALSE(is_s_minimal(wv(1, 1, 1, 1, 1, 1)));
  CHECK_FALSE(is_s_minimal(wv(4, 2, 2, 1, 1, 4)));
  CHECK_FALSE(is_s_minimal(wv(1, 0, 0, 0, 0, 0)));
  CHECK_FALSE(is_s_minimal(wv(5, 1, 3, 2, 2, 5)));
}

TEST_CASE("reduce_to_minimal single step") {
  ReductionTrace trace = reduce_to_minimal(wv(5, 1, 3, 2, 2, 5));
  CHECK(trace.result == wv(5, 1, 2, 2, 1, 4));
  REQUIRE(trace.steps.size() == 1);
  CHECK(trace.steps[0].facet == Facet::D);
  CHECK(is_s_minimal(trace.result));
}

TEST_CASE("reduce_to_minimal down to zero") {
  ReductionTrace trace = reduce_to_minimal(wv(6, 0, 8, 1, 0, 4));
  CHECK(trace.result.is_zero());
  REQUIRE(trace.steps.size() == 10);
  const char expected[] = {'A', 'A', 'A', 'D', 'A', 'D', 'A', 'C', 'A', 'C'};
  for (int i = 0; i < 10; ++i)
    CHECK(facet_tag(trace.steps[i].facet) == expected[i]);

  trace = reduce_to_minimal(wv(1, 0, 1, 1, 0, 1));
  CHECK(trace.result.is_zero());
  REQUIRE(trace.steps.size() == 2);
  CHECK(trace.steps[0].facet == Facet::A);
  CHECK(trace.steps[1].facet == Facet::C);

  trace = reduce_to_minimal(wv(0, 0, 0, 0, 0, 0));
  CHECK(trace.steps.empty());
}

TEST_CASE("reduction step chaining and weight bookkeeping") {
  for (WeightVector w : {wv(5, 1, 3, 2, 2, 5), wv(6, 0, 8, 1, 0, 4),
                         wv(4, 2, 2, 1, 1, 4), wv(3, 3, 3, 3, 3, 3)}) {
    ReductionTrace trace = reduce_to_minimal(w);
    CHECK(trace.start == w);
    WeightVector cur = w;
    for (const ReductionStep& step : trace.steps) {
      CHECK(step.before == cur);
      // The divisor form carries the facet weight of the curve it cuts.
      CHECK(step.form.degree() == facet_weights(cur)[int(step.facet)]);
      CHECK(step.form.e[step.plane_var] == 0);
      cur = step.after;
    }
    CHECK(cur == trace.result);
    CHECK(is_s_minimal(trace.result));
  }
}

TEST_CASE("symmetry group") {
  const auto& syms = symmetries();
  REQUIRE(syms.size() == 24);
  CHECK(syms[0].var_map == std::array<int, 4>{0, 1, 2, 3});
  std::set<std::array<int, 4>> distinct;
  for (const Symmetry& s : syms) {
    distinct.insert(s.var_map);
    for (int i = 0; i < kNumLines; ++i)
      CHECK(s.line_map[opposite_line(i)] == opposite_line(s.line_map[i]));
    Symmetry inv = inverse(s);
    for (int v = 0; v < kNumVars; ++v) CHECK(inv.var_map[s.var_map[v]] == v);
  }
  CHECK(distinct.size() == 24);
}

TEST_CASE("apply_symmetry respects composition on weights") {
  WeightVector w = wv(5, 1, 3, 2, 2, 5);
  for (const Symmetry& s : symmetries()) {
    WeightVector u = apply_symmetry(s, w);
    CHECK(apply_symmetry(inverse(s), u) == w);
    CHECK(u.total() == w.total());
  }
}

TEST_CASE("orbits") {
  std::vector<WeightVector> o = orbit(wv(1, 0, 0, 0, 0, 1));
  REQUIRE(o.size() == 3);
  CHECK(o[0] == wv(0, 0, 1, 1, 0, 0));
  CHECK(o[1] == wv(0, 1, 0, 0, 1, 0));
  CHECK(o[2] == wv(1, 0, 0, 0, 0, 1));

  CHECK(orbit(wv(1, 0, 0, 0, 0, 0)).size() == 6);
  CHECK(orbit(wv(1, 1, 1, 1, 1, 1)).size() == 1);
  CHECK(orbit(wv(4, 2, 2, 1, 1, 4)).size() == 12);
}

TEST_CASE("canonicalize") {
  CHECK(canonicalize(wv(2, 0, 0, 0, 0, 1)) == wv(1, 0, 0, 0, 0, 2));
  CHECK(canonicalize(wv(5, 1, 2, 2, 1, 4)) == wv(4, 2, 1, 1, 2, 5));
  CHECK(canonicalize(wv(4, 1, 1, 1, 1, 3)) == wv(3, 1, 1, 1, 1, 4));
  CHECK(canonicalize(wv(1, 0, 0, 0, 0, 0)) == wv(0, 0, 0, 0, 0, 1));
  CHECK(canonicalize(wv(2, 1, 0, 0, 1, 2)) == wv(2, 1, 0, 0, 1, 2));

  auto [canon, sym] = canonicalize_with_symmetry(wv(5, 1, 2, 2, 1, 4));
  CHECK(canon == wv(4, 2, 1, 1, 2, 5));
  CHECK(apply_symmetry(sym, wv(5, 1, 2, 2, 1, 4)) == canon);

  // The canonical member dominates its whole orbit in the reversed order.
  for (WeightVector w : {wv(6, 0, 8, 1, 0, 4), wv(3, 1, 2, 0, 1, 2)}) {
    WeightVector c = canonicalize(w);
    auto key = [](const WeightVector& v) {
      return std::array<Int, 6>{v[5], v[4], v[3], v[2], v[1], v[0]};
    };
    for (const WeightVector& m : orbit(w)) CHECK(key(c) >= key(m));
    CHECK(canonicalize(c) == c);
  }
}

TEST_CASE("s-minimality is a symmetry invariant") {
  for (WeightVector w : {wv(5, 1, 2, 2, 1, 4), wv(4, 2, 2, 1, 1, 4),
                         wv(1, 0, 0, 0, 0, 2), wv(2, 1, 0, 0, 1, 2)}) {
    bool base = is_s_minimal(w);
    for (const WeightVector& m : orbit(w)) CHECK(is_s_minimal(m) == base);
  }
}

TEST_CASE("parse and format") {
  CHECK(parse_weight_vector("5 1 3 2 2 5") == wv(5, 1, 3, 2, 2, 5));
  CHECK(parse_weight_vector("[5, 1, 3, 2, 2, 5]") == wv(5, 1, 3, 2, 2, 5));
  CHECK(parse_weight_vector("(0,0,0,0,0,0)") == wv(0, 0, 0, 0, 0, 0));
  CHECK(to_string(wv(5, 1, 3, 2, 2, 5)) == "[5, 1, 3, 2, 2, 5]");
  CHECK(parse_weight_vector(to_string(wv(1, 0, 0, 0, 0, 2))) ==
        wv(1, 0, 0, 0, 0, 2));

  CHECK_THROWS_AS((void)parse_weight_vector("1 2 3"), std::invalid_argument);
  CHECK_THROWS_AS((void)parse_weight_vector("1 2 3 4 5 6 7"),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)parse_weight_vector("1 2 3 4 5 -1"),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)parse_weight_vector("1 2 3 4 5 x"),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)parse_weight_vector("1 2 3 4 5 2000000000"),
                  std::invalid_argument);
}
