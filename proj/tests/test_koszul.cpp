#include <doctest.h>

#include "tetra/koszul.hpp"

using namespace tetra;

namespace {

Monomial mono(Int a, Int b, Int c, Int d) {
  Monomial m;
  m.e = {a, b, c, d};
  return m;
}

}  // namespace

TEST_CASE("graded_betti of a line") {
  GradedBetti gb = graded_betti(make_ideal({mono(1, 0, 0, 0), mono(0, 1, 0, 0)}));
  CHECK(gb.ranks.size() == 3);
  CHECK(gb.ranks.at({1, {1, 0, 0, 0}}) == 1);
  CHECK(gb.ranks.at({1, {0, 1, 0, 0}}) == 1);
  CHECK(gb.ranks.at({2, {1, 1, 0, 0}}) == 1);
  CHECK(gb.total(1) == 2);
  CHECK(gb.total(2) == 1);
  CHECK(gb.total(3) == 0);
}

TEST_CASE("graded_betti of trivial ideals") {
  CHECK(graded_betti(make_ideal({})).ranks.empty());

  GradedBetti unit = graded_betti(make_ideal({Monomial::one()}));
  CHECK(unit.ranks.size() == 1);
  CHECK(unit.ranks.at({1, {0, 0, 0, 0}}) == 1);
}

TEST_CASE("graded_betti of two skew lines") {
  GradedBetti gb =
      graded_betti(tetrahedral_ideal(WeightVector(1, 0, 0, 0, 0, 1)));
  BettiTable table = gb.by_total_degree();
  CHECK(table.entries ==
        std::map<std::pair<int, Int>, Int>{
            {{1, 2}, 4}, {{2, 3}, 4}, {{3, 4}, 1}});
  CHECK(table.rank(1) == 4);
  CHECK(table.rank(2) == 4);
  CHECK(table.rank(3) == 1);
}

TEST_CASE("graded_betti of a complete intersection") {
  BettiTable table =
      graded_betti(tetrahedral_ideal(WeightVector(1, 0, 1, 1, 0, 1)))
          .by_total_degree();
  CHECK(table.entries ==
        std::map<std::pair<int, Int>, Int>{{{1, 2}, 2}, {{2, 4}, 1}});
}

TEST_CASE("graded_betti frozen tables for minimal curves") {
  BettiTable table =
      graded_betti(tetrahedral_ideal(WeightVector(1, 0, 0, 0, 0, 2)))
          .by_total_degree();
  CHECK(table.entries ==
        std::map<std::pair<int, Int>, Int>{
            {{1, 3}, 6}, {{2, 4}, 7}, {{3, 5}, 2}});

  table = graded_betti(tetrahedral_ideal(WeightVector(2, 1, 0, 0, 1, 2)))
              .by_total_degree();
  CHECK(table.entries ==
        std::map<std::pair<int, Int>, Int>{
            {{1, 4}, 7}, {{2, 5}, 8}, {{3, 6}, 2}});

  table = graded_betti(tetrahedral_ideal(WeightVector(3, 1, 1, 1, 1, 4)))
              .by_total_degree();
  CHECK(table.entries ==
        std::map<std::pair<int, Int>, Int>{
            {{1, 7}, 16}, {{2, 8}, 23}, {{3, 9}, 8}});
}

TEST_CASE("generator cap") {
  OracleCaps caps;
  caps.max_betti_generators = 4;
  try {
    (void)graded_betti(tetrahedral_ideal(WeightVector(3, 1, 1, 1, 1, 4)), caps);
    CHECK(false);
  } catch (const CapExceededError& e) {
    CHECK(e.cap_name() == "betti-generators");
  }
}
