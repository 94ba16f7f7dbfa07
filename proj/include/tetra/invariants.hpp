#pragma once

#include <vector>

#include "tetra/hilbert.hpp"
#include "tetra/weights.hpp"

namespace tetra {

// sum of C(ai + 1, 2); overflow-checked
Int degree(const WeightVector& w);

// closed form for S-minimal nontrivial curves, via the canonical position:
// deg * (a1 + a6 - 1) + 1 - C(a1 + a6 + 2, 3)
Int genus_minimal(const WeightVector& w);

// genus_minimal when S-minimal, otherwise the Hilbert-polynomial fit;
// rejects the trivial curve
Int genus(const WeightVector& w, const OracleCaps& caps = {});

// least degree of a minimal generator, S-minimal nontrivial only
Int initial_degree(const WeightVector& w);

// S-minimal vectors whose maximal weight sits last and equals m, in
// lexicographic order
std::vector<WeightVector> enumerate_minimal(Int m);

// closed form for enumerate_minimal(m).size()
Int count_minimal(Int m);

// Two closed estimates obtained by bounding min{a1-a5, m-a2} below.
// count_minimal_lower_bound replaces both minima by a1 - max{a2, a5} and is
// a genuine lower bound. count_minimal_estimate uses a1 - min{a2, a5}
// instead, which overshoots the product and can exceed the exact count
// (already at m = 2); the acceptance suite reports where it first fails.
Int count_minimal_lower_bound(Int m);
Int count_minimal_estimate(Int m);

}  // namespace tetra
