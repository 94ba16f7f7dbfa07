#include <doctest.h>

#include "tetra/classify.hpp"

using namespace tetra;

namespace {

WeightVector wv(Int a1, Int a2, Int a3, Int a4, Int a5, Int a6) {
  return WeightVector(a1, a2, a3, a4, a5, a6);
}

}  // namespace

TEST_CASE("is_acm by descent") {
  CHECK(is_acm(wv(0, 0, 0, 0, 0, 0)));
  CHECK(is_acm(wv(1, 0, 1, 1, 0, 1)));
  CHECK(is_acm(wv(1, 0, 0, 1, 0, 1)));
  CHECK(is_acm(wv(6, 0, 8, 1, 0, 4)));
  CHECK(is_acm(wv(2, 2, 2, 2, 2, 2)));
  CHECK_FALSE(is_acm(wv(1, 0, 0, 0, 0, 1)));
  CHECK_FALSE(is_acm(wv(2, 0, 1, 1, 0, 2)));
  CHECK_FALSE(is_acm(wv(5, 1, 3, 2, 2, 5)));
}

TEST_CASE("schwartau_acm matches the descent on the four-cycle") {
  CHECK(schwartau_acm(1, 1, 1, 1));
  CHECK_FALSE(schwartau_acm(2, 1, 1, 2));
  CHECK(schwartau_acm(1, 0, 1, 1));
  CHECK(schwartau_acm(1, 1, 0, 1));
  CHECK_FALSE(schwartau_acm(2, 0, 0, 3));
  CHECK(schwartau_acm(0, 1, 0, 4));
  CHECK(schwartau_acm(0, 0, 0, 7));
  CHECK(schwartau_acm(0, 0, 0, 0));
  CHECK_FALSE(schwartau_acm(0, 2, 3, 0));

  for (Int a1 = 0; a1 <= 3; ++a1)
    for (Int a3 = 0; a3 <= 3; ++a3)
      for (Int a4 = 0; a4 <= 3; ++a4)
        for (Int a6 = 0; a6 <= 3; ++a6)
          CHECK(schwartau_acm(a1, a3, a4, a6) ==
                is_acm(wv(a1, 0, a3, a4, 0, a6)));
}

TEST_CASE("is_buchsbaum") {
  CHECK(is_buchsbaum(wv(0, 0, 0, 0, 0, 0)));
  CHECK(is_buchsbaum(wv(1, 0, 1, 1, 0, 1)));
  CHECK(is_buchsbaum(wv(1, 0, 0, 0, 0, 1)));
  CHECK(is_buchsbaum(wv(2, 1, 0, 0, 1, 2)));
  CHECK(is_buchsbaum(wv(0, 1, 0, 0, 1, 0)));
  CHECK(is_buchsbaum(wv(3, 2, 0, 0, 2, 3)));
  CHECK_FALSE(is_buchsbaum(wv(1, 0, 0, 0, 0, 2)));
  CHECK_FALSE(is_buchsbaum(wv(3, 1, 1, 1, 1, 4)));
  CHECK_FALSE(is_buchsbaum(wv(5, 1, 3, 2, 2, 5)));
}

TEST_CASE("hr_diameter buckets") {
  CHECK(hr_diameter(wv(0, 0, 0, 0, 0, 0)) == HrDiameter::acm);
  CHECK(hr_diameter(wv(1, 0, 1, 1, 0, 1)) == HrDiameter::acm);
  CHECK(hr_diameter(wv(1, 0, 0, 0, 0, 1)) == HrDiameter::one);
  CHECK(hr_diameter(wv(2, 1, 0, 0, 1, 2)) == HrDiameter::one);
  CHECK(hr_diameter(wv(1, 0, 0, 0, 0, 2)) == HrDiameter::two);
  CHECK(hr_diameter(wv(2, 1, 0, 0, 1, 3)) == HrDiameter::two);
  CHECK(hr_diameter(wv(2, 0, 0, 0, 1, 2)) == HrDiameter::two);
  CHECK(hr_diameter(wv(2, 1, 0, 0, 0, 2)) == HrDiameter::two);
  CHECK(hr_diameter(wv(2, 0, 0, 0, 0, 2)) == HrDiameter::more_than_two);
  CHECK(hr_diameter(wv(3, 1, 1, 1, 1, 4)) == HrDiameter::more_than_two);
  CHECK(hr_diameter(wv(5, 1, 3, 2, 2, 5)) == HrDiameter::more_than_two);
  CHECK(to_string(HrDiameter::acm) == "0");
  CHECK(to_string(HrDiameter::more_than_two) == "more-than-two");
}

TEST_CASE("known_unobstructed priorities") {
  UnobstructedStatus st = known_unobstructed(wv(1, 0, 1, 1, 0, 1));
  CHECK(st.known);
  CHECK(st.family == UnobstructedFamily::acm);

  st = known_unobstructed(wv(1, 0, 0, 0, 0, 1));
  CHECK(st.known);
  CHECK(st.family == UnobstructedFamily::buchsbaum);

  st = known_unobstructed(wv(1, 0, 0, 0, 0, 2));
  CHECK(st.known);
  CHECK(st.family == UnobstructedFamily::diameter_two_a);

  st = known_unobstructed(wv(2, 0, 0, 0, 1, 2));
  CHECK(st.known);
  CHECK(st.family == UnobstructedFamily::diameter_two_b);

  st = known_unobstructed(wv(1, 0, 0, 0, 0, 3));
  CHECK(st.known);
  CHECK(st.family == UnobstructedFamily::skew_pair);

  st = known_unobstructed(wv(3, 1, 1, 1, 1, 4));
  CHECK_FALSE(st.known);
  CHECK(st.family == UnobstructedFamily::none);

  // Classification happens after descent.
  st = known_unobstructed(wv(5, 1, 3, 2, 2, 5));
  CHECK_FALSE(st.known);

  CHECK(to_string(UnobstructedFamily::buchsbaum) ==
        "buchsbaum (k, k-1, 0, 0, k-1, k)");
  CHECK(to_string(UnobstructedFamily::skew_pair) ==
        "skew pair (a1, 0, 0, 0, 0, a6)");
}

TEST_CASE("linear_resolution_known") {
  CHECK(linear_resolution_known(wv(1, 0, 0, 0, 0, 1)) ==
        LinearResolutionStatus::yes);
  CHECK(linear_resolution_known(wv(5, 1, 2, 2, 1, 4)) ==
        LinearResolutionStatus::yes);
  CHECK(linear_resolution_known(wv(5, 1, 3, 2, 2, 5)) ==
        LinearResolutionStatus::unknown);
  CHECK(linear_resolution_known(wv(0, 0, 0, 0, 0, 0)) ==
        LinearResolutionStatus::unknown);
}

TEST_CASE("classify bundles") {
  CurveClassification c = classify(wv(5, 1, 3, 2, 2, 5));
  CHECK_FALSE(c.trivial);
  CHECK_FALSE(c.s_minimal);
  CHECK_FALSE(c.acm);
  CHECK_FALSE(c.buchsbaum);
  CHECK(c.hr == HrDiameter::more_than_two);
  CHECK_FALSE(c.unobstructed.known);
  CHECK(c.linear_resolution == LinearResolutionStatus::unknown);
  CHECK(c.minimal_curve == wv(5, 1, 2, 2, 1, 4));
  CHECK(c.reductions == 1);

  c = classify(wv(0, 0, 0, 0, 0, 0));
  CHECK(c.trivial);
  CHECK(c.s_minimal);
  CHECK(c.acm);
  CHECK(c.buchsbaum);
  CHECK(c.hr == HrDiameter::acm);
  CHECK(c.unobstructed.family == UnobstructedFamily::acm);
  CHECK(c.reductions == 0);

  c = classify(wv(1, 0, 0, 0, 0, 2));
  CHECK(c.s_minimal);
  CHECK_FALSE(c.acm);
  CHECK_FALSE(c.buchsbaum);
  CHECK(c.hr == HrDiameter::two);
  CHECK(c.unobstructed.family == UnobstructedFamily::diameter_two_a);
  CHECK(c.linear_resolution == LinearResolutionStatus::yes);
  CHECK(c.minimal_curve == wv(1, 0, 0, 0, 0, 2));

  c = classify(wv(6, 0, 8, 1, 0, 4));
  CHECK(c.acm);
  CHECK(c.trivial == false);
  CHECK(c.minimal_curve == wv(0, 0, 0, 0, 0, 0));
  CHECK(c.reductions == 10);
}
