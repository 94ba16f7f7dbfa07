#include "tetra/classify.hpp"

#include <stdexcept>

namespace tetra {

namespace {

// (k, k-1, 0, 0, k-1, k), k >= 1
bool buchsbaum_pattern(const WeightVector& v) {
  Int k = v[0];
  return k >= 1 && v[5] == k && v[1] == k - 1 && v[4] == k - 1 && v[2] == 0 &&
         v[3] == 0;
}

// (k, k-1, 0, 0, k-1, k+1), k >= 1
bool diameter_two_a_pattern(const WeightVector& v) {
  Int k = v[0];
  return k >= 1 && v[5] == k + 1 && v[1] == k - 1 && v[4] == k - 1 &&
         v[2] == 0 && v[3] == 0;
}

// (k, k-2, 0, 0, k-1, k), k >= 2
bool diameter_two_b_pattern(const WeightVector& v) {
  Int k = v[0];
  return k >= 2 && v[5] == k && v[1] == k - 2 && v[4] == k - 1 && v[2] == 0 &&
         v[3] == 0;
}

// (a1, 0, 0, 0, 0, a6), both positive
bool skew_pair_pattern(const WeightVector& v) {
  return v[0] >= 1 && v[5] >= 1 && v[1] == 0 && v[2] == 0 && v[3] == 0 &&
         v[4] == 0;
}

bool orbit_matches(const WeightVector& w, bool (*pattern)(const WeightVector&)) {
  for (const WeightVector& v : orbit(w))
    if (pattern(v)) return true;
  return false;
}

}  // namespace

std::string to_string(HrDiameter d) {
  switch (d) {
    case HrDiameter::acm: return "0";
    case HrDiameter::one: return "1";
    case HrDiameter::two: return "2";
    case HrDiameter::more_than_two: return "more-than-two";
  }
  return "?";
}

std::string to_string(UnobstructedFamily f) {
  switch (f) {
    case UnobstructedFamily::none: return "none";
    case UnobstructedFamily::acm: return "acm";
    case UnobstructedFamily::buchsbaum: return "buchsbaum (k, k-1, 0, 0, k-1, k)";
    case UnobstructedFamily::diameter_two_a:
      return "diameter-two (k, k-1, 0, 0, k-1, k+1)";
    case UnobstructedFamily::diameter_two_b:
      return "diameter-two (k, k-2, 0, 0, k-1, k)";
    case UnobstructedFamily::skew_pair: return "skew pair (a1, 0, 0, 0, 0, a6)";
  }
  return "?";
}

bool is_acm(const WeightVector& w) { return reduce_to_minimal(w).result.is_zero(); }

bool schwartau_acm(Int a1, Int a3, Int a4, Int a6) {
  if (a1 < 0 || a3 < 0 || a4 < 0 || a6 < 0)
    throw std::invalid_argument("negative weight");
  // the four lines form a cycle 1-3-6-4; (1,6) and (3,4) are the skew pairs
  int zeros = (a1 == 0) + (a3 == 0) + (a4 == 0) + (a6 == 0);
  if (zeros == 0) {
    Int d = (a1 + a6) - (a3 + a4);
    return d <= 1 && d >= -1;
  }
  if (zeros == 1) {
    if (a1 == 0) return a6 + 1 >= a3 + a4;
    if (a6 == 0) return a1 + 1 >= a3 + a4;
    if (a3 == 0) return a4 + 1 >= a1 + a6;
    return a3 + 1 >= a1 + a6;
  }
  // two or more vanish: connected unless only a skew pair survives
  bool skew_pair_left = (a1 > 0 && a6 > 0 && a3 == 0 && a4 == 0) ||
                        (a3 > 0 && a4 > 0 && a1 == 0 && a6 == 0);
  return !skew_pair_left;
}

bool is_buchsbaum(const WeightVector& w) {
  WeightVector r = reduce_to_minimal(w).result;
  if (r.is_zero()) return true;
  return orbit_matches(r, buchsbaum_pattern);
}

HrDiameter hr_diameter(const WeightVector& w) {
  WeightVector r = reduce_to_minimal(w).result;
  if (r.is_zero()) return HrDiameter::acm;
  if (orbit_matches(r, buchsbaum_pattern)) return HrDiameter::one;
  if (orbit_matches(r, diameter_two_a_pattern) ||
      orbit_matches(r, diameter_two_b_pattern))
    return HrDiameter::two;
  return HrDiameter::more_than_two;
}

UnobstructedStatus known_unobstructed(const WeightVector& w) {
  WeightVector r = reduce_to_minimal(w).result;
  if (r.is_zero()) return {true, UnobstructedFamily::acm};
  if (orbit_matches(r, buchsbaum_pattern))
    return {true, UnobstructedFamily::buchsbaum};
  if (orbit_matches(r, diameter_two_a_pattern))
    return {true, UnobstructedFamily::diameter_two_a};
  if (orbit_matches(r, diameter_two_b_pattern))
    return {true, UnobstructedFamily::diameter_two_b};
  if (orbit_matches(r, skew_pair_pattern))
    return {true, UnobstructedFamily::skew_pair};
  return {false, UnobstructedFamily::none};
}

LinearResolutionStatus linear_resolution_known(const WeightVector& w) {
  return (!w.is_zero() && is_s_minimal(w)) ? LinearResolutionStatus::yes
                                           : LinearResolutionStatus::unknown;
}

CurveClassification classify(const WeightVector& w) {
  ReductionTrace trace = reduce_to_minimal(w);
  CurveClassification c;
  c.trivial = w.is_zero();
  c.s_minimal = is_s_minimal(w);
  c.acm = trace.result.is_zero();
  c.buchsbaum = is_buchsbaum(w);
  c.hr = hr_diameter(w);
  c.unobstructed = known_unobstructed(w);
  c.linear_resolution = linear_resolution_known(w);
  c.minimal_curve = trace.result;
  c.reductions = static_cast<Int>(trace.steps.size());
  return c;
}

}  // namespace tetra
