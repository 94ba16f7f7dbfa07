#pragma once

#include <string>

#include "tetra/weights.hpp"

namespace tetra {

// Hartshorne-Rao module diameter, bucketed. "acm" means the module is zero.
enum class HrDiameter { acm, one, two, more_than_two };

std::string to_string(HrDiameter d);

// Families with unobstructed members (smooth points of the Hilbert scheme).
enum class UnobstructedFamily {
  none,
  acm,               // reduces to the trivial curve
  buchsbaum,         // (k, k-1, 0, 0, k-1, k), k >= 1, up to symmetry
  diameter_two_a,    // (k, k-1, 0, 0, k-1, k+1), k >= 1
  diameter_two_b,    // (k, k-2, 0, 0, k-1, k), k >= 2
  skew_pair,         // (a1, 0, 0, 0, 0, a6), a1, a6 >= 1
};

std::string to_string(UnobstructedFamily f);

struct UnobstructedStatus {
  bool known = false;
  UnobstructedFamily family = UnobstructedFamily::none;
};

// arithmetically Cohen-Macaulay: the descent ends at the zero vector
bool is_acm(const WeightVector& w);

// connectedness criterion for a2 = a5 = 0 (equivalent to ACM there)
bool schwartau_acm(Int a1, Int a3, Int a4, Int a6);

// ACM, or the reduced curve is the Buchsbaum family up to symmetry
bool is_buchsbaum(const WeightVector& w);

HrDiameter hr_diameter(const WeightVector& w);

UnobstructedStatus known_unobstructed(const WeightVector& w);

enum class LinearResolutionStatus { yes, unknown };

// "yes" exactly for S-minimal nontrivial curves
LinearResolutionStatus linear_resolution_known(const WeightVector& w);

struct CurveClassification {
  bool trivial = false;
  bool s_minimal = false;
  bool acm = false;
  bool buchsbaum = false;
  HrDiameter hr = HrDiameter::acm;
  UnobstructedStatus unobstructed;
  LinearResolutionStatus linear_resolution = LinearResolutionStatus::unknown;
  WeightVector minimal_curve;
  Int reductions = 0;
};

CurveClassification classify(const WeightVector& w);

}  // namespace tetra
