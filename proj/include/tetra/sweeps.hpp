#pragma once

#include <set>
#include <string>
#include <vector>

#include "tetra/hilbert.hpp"
#include "tetra/weights.hpp"

namespace tetra {

// Every sweep has one per-item body shared by a serial driver and an
// OpenMP driver; the two must produce identical reports.
enum class ExecPolicy { serial, parallel };

struct SweepIssue {
  WeightVector w;
  std::string what;
  auto operator<=>(const SweepIssue&) const = default;
};

struct SweepReport {
  Int cases = 0;
  std::vector<SweepIssue> issues;  // sorted

  bool ok() const { return issues.empty(); }
  bool operator==(const SweepReport&) const = default;
};

// all weight vectors with entries <= max_entry, index order
Int weight_vector_count(Int max_entry);
WeightVector weight_vector_at(Int index, Int max_entry);

// S-minimal vectors with entries <= max_entry, zero excluded, sorted
std::vector<WeightVector> all_s_minimal(Int max_entry);

// every applicable reduction of every vector passes bdl_check
SweepReport bdl_sweep(Int max_entry, ExecPolicy policy);

// corner-cut generators match the oracle on every S-minimal vector, all in
// the initial degree, count matching the closed form
SweepReport generator_sweep(Int max_entry, ExecPolicy policy);

// oracle graded Betti numbers match the closed-form table and sit in a
// single strand of consecutive degrees
SweepReport betti_sweep(Int max_entry, ExecPolicy policy,
                        const OracleCaps& caps = {});

// Hilbert fit reproduces the closed-form degree everywhere and, on
// S-minimal vectors, the closed-form genus and the alternating-sum Hilbert
// function of the length-three resolution
SweepReport hilbert_sweep(Int max_entry, ExecPolicy policy,
                          const OracleCaps& caps = {});

// face counts, chain condition d1*d2 = 0, Euler count b1 - b2 + b3 = 1,
// label degrees, the every-edge-on-one-facet criterion against the
// arithmetic Buchsbaum classification, and the two forbidden patterns as
// necessary conditions for diameter <= 2
SweepReport cell_sweep(Int max_entry, ExecPolicy policy);

// number of S-minimal vectors with last entry maximal and equal to m,
// counted by testing every vector with entries <= m
Int count_minimal_bruteforce(Int m, ExecPolicy policy);

// canonical forms of every S-minimal curve reachable by always trimming
// some maximal-weight face (not only the first)
std::set<WeightVector> reachable_minimal_curves(const WeightVector& w);

// issues list the vectors reaching two or more distinct canonical results;
// exploratory, callers report rather than gate
SweepReport tie_break_sweep(Int max_entry, ExecPolicy policy);

struct VerifyCheck {
  std::string name;
  bool ok = true;
  std::string detail;
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;
  bool ok() const;
};

// per-curve battery: descent bdl steps, generator equality, graded Betti
// agreement, Hilbert degree/genus agreement, chain condition
VerifyReport verify_battery(const WeightVector& w, const OracleCaps& caps = {});

}  // namespace tetra
