#include <doctest.h>

#include <stdexcept>

#include "tetra/hilbert.hpp"

using namespace tetra;

TEST_CASE("hilbert_function of small ideals") {
  MonomialIdeal skew = tetrahedral_ideal(WeightVector(1, 0, 0, 0, 0, 1));
  CHECK(hilbert_function(skew, 0) == 1);
  CHECK(hilbert_function(skew, 1) == 4);
  CHECK(hilbert_function(skew, 2) == 6);
  CHECK(hilbert_function(skew, 5) == 12);

  CHECK(hilbert_function(make_ideal({}), 3) == 20);
  CHECK(hilbert_function(make_ideal({Monomial::one()}), 3) == 0);
  CHECK_THROWS_AS((void)hilbert_function(skew, -1), std::invalid_argument);
}

TEST_CASE("two membership routes agree") {
  for (WeightVector w :
       {WeightVector(1, 0, 0, 0, 0, 1), WeightVector(2, 1, 0, 0, 1, 2),
        WeightVector(1, 1, 1, 1, 1, 1), WeightVector(3, 1, 1, 1, 1, 4)}) {
    MonomialIdeal ideal = tetrahedral_ideal(w);
    for (Int t = 0; t <= 8; ++t)
      CHECK(hilbert_function(ideal, t) == tetrahedral_hilbert_function(w, t));
  }
}

TEST_CASE("fit_hilbert_tail on a synthetic function") {
  HilbertData data =
      fit_hilbert_tail([](Int t) { return 5 * t + 7; }, 4);
  CHECK(data.stable_from == 0);
  CHECK(data.degree == 5);
  CHECK(data.genus == -6);

  CHECK_THROWS_AS(
      (void)fit_hilbert_tail([](Int t) { return t; }, 1),
      std::invalid_argument);
}

TEST_CASE("curve_hilbert_data frozen values") {
  HilbertData data = curve_hilbert_data(WeightVector(1, 0, 0, 0, 0, 1));
  CHECK(data.degree == 2);
  CHECK(data.genus == -1);
  CHECK(data.stable_from == 1);

  data = curve_hilbert_data(WeightVector(2, 0, 0, 0, 0, 2));
  CHECK(data.degree == 6);
  CHECK(data.genus == -1);
  CHECK(data.stable_from == 3);

  data = curve_hilbert_data(WeightVector(1, 0, 1, 1, 0, 1));
  CHECK(data.degree == 4);
  CHECK(data.genus == 1);

  data = curve_hilbert_data(WeightVector(2, 1, 0, 0, 1, 2));
  CHECK(data.degree == 8);
  CHECK(data.genus == 5);

  data = curve_hilbert_data(WeightVector(1, 1, 1, 1, 1, 1));
  CHECK(data.degree == 6);
  CHECK(data.genus == 3);

  data = curve_hilbert_data(WeightVector(3, 1, 1, 1, 1, 4));
  CHECK(data.degree == 20);
  CHECK(data.genus == 37);

  data = curve_hilbert_data(WeightVector(0, 0, 0, 0, 0, 0));
  CHECK(data.degree == 0);
  CHECK(data.genus == 1);
}

TEST_CASE("degree cap") {
  OracleCaps caps;
  caps.max_hilbert_degree = 3;
  CHECK_THROWS_AS((void)curve_hilbert_data(WeightVector(2, 0, 0, 0, 0, 2), caps),
                  CapExceededError);
  try {
    (void)hilbert_function(make_ideal({}), 10, caps);
    CHECK(false);
  } catch (const CapExceededError& e) {
    CHECK(e.cap_name() == "hilbert-degree");
  }
}
