#pragma once

#include <functional>
#include <map>

#include "tetra/errors.hpp"
#include "tetra/ideal.hpp"

namespace tetra {

// Limits for the enumeration engines; exceeding one raises CapExceededError
// carrying the cap's name.
struct OracleCaps {
  Int max_betti_generators = 64;  // "betti-generators"
  Int max_hilbert_degree = 60;    // "hilbert-degree"
};

// number of degree-t monomials outside the ideal, by direct enumeration
Int hilbert_function(const MonomialIdeal& ideal, Int t,
                     const OracleCaps& caps = {});
// same count through the definitional pair-sum membership
Int tetrahedral_hilbert_function(const WeightVector& w, Int t,
                                 const OracleCaps& caps = {});

// Least-degree linear fit deg*t + (1 - genus) of the tail of the Hilbert
// function, certified by `window` consecutive agreements.
struct HilbertData {
  std::map<Int, Int> values;   // every degree evaluated during the fit
  Int stable_from = 0;         // first degree of the certified window
  Int degree = 0;
  Int genus = 0;
};

HilbertData fit_hilbert_tail(const std::function<Int(Int)>& hf, Int window,
                             const OracleCaps& caps = {});
HilbertData hilbert_polynomial(const MonomialIdeal& ideal, Int window,
                               const OracleCaps& caps = {});
// window = max(4, sum of weights)
HilbertData curve_hilbert_data(const WeightVector& w,
                               const OracleCaps& caps = {});

}  // namespace tetra
