#include "tetra/sweeps.hpp"

#include <algorithm>
#include <exception>
#include <map>

#include "tetra/cell_complex.hpp"
#include "tetra/classify.hpp"
#include "tetra/errors.hpp"
#include "tetra/invariants.hpp"
#include "tetra/koszul.hpp"

namespace tetra {

namespace {

// Shared driver: body(index, report) runs once per index under either
// policy; exceptions become issues so a parallel region never unwinds.
template <class At, class Body>
SweepReport run_indexed(Int n, ExecPolicy policy, const At& at, const Body& body) {
  auto guarded = [&](Int i, SweepReport& report) {
    try {
      body(i, report);
    } catch (const std::exception& e) {
      report.issues.push_back({at(i), std::string("exception: ") + e.what()});
    }
  };
  SweepReport out;
  if (policy == ExecPolicy::serial) {
    for (Int i = 0; i < n; ++i) guarded(i, out);
  } else {
    std::vector<SweepReport> parts;
#pragma omp parallel
    {
      SweepReport local;
#pragma omp for schedule(dynamic, 16) nowait
      for (Int i = 0; i < n; ++i) guarded(i, local);
#pragma omp critical
      parts.push_back(std::move(local));
    }
    for (SweepReport& p : parts) {
      out.cases += p.cases;
      out.issues.insert(out.issues.end(), p.issues.begin(), p.issues.end());
    }
  }
  std::sort(out.issues.begin(), out.issues.end());
  return out;
}

Int128 ipow6(Int base) {
  Int128 n = 1;
  for (int i = 0; i < kNumLines; ++i) n *= base;
  return n;
}

// Hilbert function of the quotient predicted by the linear resolution
Int128 resolution_hilbert(const BettiTable& betti, Int s, Int t) {
  Int b1 = betti.entries.at({1, s});
  Int b2 = betti.entries.at({2, s + 1});
  Int b3 = betti.entries.at({3, s + 2});
  return binom3(Int128{t} + 3) - Int128{b1} * binom3(Int128{t} - s + 3) +
         Int128{b2} * binom3(Int128{t} - s + 2) -
         Int128{b3} * binom3(Int128{t} - s + 1);
}

}  // namespace

Int weight_vector_count(Int max_entry) {
  return to_int_checked(ipow6(max_entry + 1));
}

WeightVector weight_vector_at(Int index, Int max_entry) {
  const Int base = max_entry + 1;
  WeightVector w;
  for (int i = kNumLines - 1; i >= 0; --i) {
    w[i] = index % base;
    index /= base;
  }
  return w;
}

std::vector<WeightVector> all_s_minimal(Int max_entry) {
  std::vector<WeightVector> out;
  const Int n = weight_vector_count(max_entry);
  for (Int i = 0; i < n; ++i) {
    WeightVector w = weight_vector_at(i, max_entry);
    if (!w.is_zero() && is_s_minimal(w)) out.push_back(w);
  }
  return out;
}

SweepReport bdl_sweep(Int max_entry, ExecPolicy policy) {
  const Int n = weight_vector_count(max_entry);
  auto at = [&](Int idx) { return weight_vector_at(idx, max_entry); };
  return run_indexed(n, policy, at, [&](Int idx, SweepReport& report) {
    WeightVector w = weight_vector_at(idx, max_entry);
    ++report.cases;
    if (w.is_zero()) return;
    MonomialIdeal before = tetrahedral_ideal(w);
    for (Facet f : applicable_reductions(w)) {
      ReductionStep step = apply_reduction(w, f);
      MonomialIdeal after = tetrahedral_ideal(step.after);
      std::vector<Monomial> gens;
      gens.reserve(after.gens.size() + 1);
      Monomial g = Monomial::variable(step.plane_var);
      for (const Monomial& m : after.gens) gens.push_back(m * g);
      gens.push_back(step.form);
      if (!(make_ideal(std::move(gens)) == before))
        report.issues.push_back(
            {w, std::string("basic double link mismatch at facet ") + facet_tag(f)});
    }
  });
}

SweepReport generator_sweep(Int max_entry, ExecPolicy policy) {
  std::vector<WeightVector> list = all_s_minimal(max_entry);
  auto at = [&](Int idx) { return list[idx]; };
  return run_indexed(static_cast<Int>(list.size()), policy, at,
                     [&](Int idx, SweepReport& report) {
    const WeightVector& w = list[idx];
    ++report.cases;
    MonomialIdeal cut = minimal_generators(w);
    MonomialIdeal oracle = tetrahedral_ideal(w);
    if (!(cut == oracle)) {
      report.issues.push_back({w, "corner-cut generators differ from the oracle"});
      return;
    }
    Int s = initial_degree(w);
    for (const Monomial& m : oracle.gens)
      if (m.degree() != s) {
        report.issues.push_back({w, "generator outside the initial degree"});
        return;
      }
    if (static_cast<Int>(oracle.gens.size()) != betti_numbers(w).rank(1))
      report.issues.push_back({w, "generator count differs from the closed form"});
  });
}

SweepReport betti_sweep(Int max_entry, ExecPolicy policy, const OracleCaps& caps) {
  std::vector<WeightVector> list = all_s_minimal(max_entry);
  auto at = [&](Int idx) { return list[idx]; };
  return run_indexed(static_cast<Int>(list.size()), policy, at,
                     [&](Int idx, SweepReport& report) {
    const WeightVector& w = list[idx];
    ++report.cases;
    GradedBetti gb = graded_betti(tetrahedral_ideal(w), caps);
    if (!(gb.by_total_degree() == betti_numbers(w))) {
      report.issues.push_back({w, "graded Betti numbers differ from the closed form"});
      return;
    }
    Int s = initial_degree(w);
    for (const auto& [key, rank] : gb.ranks) {
      const auto& [i, b] = key;
      if (b[0] + b[1] + b[2] + b[3] != s + i - 1) {
        report.issues.push_back({w, "Betti number outside the single linear strand"});
        return;
      }
    }
  });
}

SweepReport hilbert_sweep(Int max_entry, ExecPolicy policy, const OracleCaps& caps) {
  const Int n = weight_vector_count(max_entry);
  auto at = [&](Int idx) { return weight_vector_at(idx, max_entry); };
  return run_indexed(n, policy, at, [&](Int idx, SweepReport& report) {
    WeightVector w = weight_vector_at(idx, max_entry);
    ++report.cases;
    HilbertData data = curve_hilbert_data(w, caps);
    if (data.degree != degree(w)) {
      report.issues.push_back({w, "fitted degree differs from the closed form"});
      return;
    }
    if (w.is_zero() || !is_s_minimal(w)) return;
    if (data.genus != genus_minimal(w)) {
      report.issues.push_back({w, "fitted genus differs from the closed form"});
      return;
    }
    BettiTable betti = betti_numbers(w);
    Int s = initial_degree(w);
    for (const auto& [t, value] : data.values)
      if (Int128{value} != resolution_hilbert(betti, s, t)) {
        report.issues.push_back(
            {w, "Hilbert function differs from the resolution's alternating sum"});
        return;
      }
  });
}

SweepReport cell_sweep(Int max_entry, ExecPolicy policy) {
  std::vector<WeightVector> list = all_s_minimal(max_entry);
  auto at = [&](Int idx) { return list[idx]; };
  return run_indexed(static_cast<Int>(list.size()), policy, at,
                     [&](Int idx, SweepReport& report) {
    const WeightVector& w = list[idx];
    ++report.cases;
    CellularResolution res = cellular_differentials(w);
    const BettiTable& betti = res.betti;
    Int b1 = betti.rank(1), b2 = betti.rank(2), b3 = betti.rank(3);
    auto fail = [&](const char* what) { report.issues.push_back({w, what}); };
    if (static_cast<Int>(res.complex.vertices.size()) != b1 ||
        static_cast<Int>(res.complex.edges.size()) != b2 ||
        static_cast<Int>(res.complex.facet_corners.size()) != b3)
      return fail("face counts differ from the closed-form ranks");
    if (b1 - b2 + b3 != 1) return fail("Euler count is not 1");
    if (!composes_to_zero(res.d1, res.d2)) return fail("d1 * d2 is nonzero");
    for (const auto& col : res.d1.columns)
      for (const auto& entry : col)
        if (entry.factor.degree() != 1) return fail("non-linear entry in d1");
    for (const auto& col : res.d2.columns)
      for (const auto& entry : col)
        if (entry.factor.degree() != 1) return fail("non-linear entry in d2");
    bool predicate = buchsbaum_cell_predicate(w);
    bool buchsbaum = is_buchsbaum(w) && !is_acm(w);
    if (predicate != buchsbaum)
      return fail("edge-facet criterion disagrees with the Buchsbaum classification");
    HrDiameter hr = hr_diameter(w);
    if (hr == HrDiameter::one || hr == HrDiameter::two) {
      ForbiddenPatterns patterns = forbidden_patterns(w);
      if (patterns.three_in_row || patterns.square_2x2)
        return fail("forbidden pattern present at diameter <= 2");
    }
  });
}

Int count_minimal_bruteforce(Int m, ExecPolicy policy) {
  const Int n = weight_vector_count(m);
  auto at = [&](Int idx) { return weight_vector_at(idx, m); };
  SweepReport report = run_indexed(n, policy, at, [&](Int idx, SweepReport& r) {
    WeightVector w = weight_vector_at(idx, m);
    if (!w.is_zero() && w[5] == m && w.max_entry() == m && is_s_minimal(w))
      ++r.cases;
  });
  return report.cases;
}

namespace {

const std::set<WeightVector>& reachable_impl(
    const WeightVector& w, std::map<WeightVector, std::set<WeightVector>>& memo) {
  auto it = memo.find(w);
  if (it != memo.end()) return it->second;
  std::set<WeightVector> out;
  if (is_s_minimal(w)) {
    out.insert(canonicalize(w));
  } else {
    auto fw = facet_weights(w);
    Int top = *std::max_element(fw.begin(), fw.end());
    for (int f = 0; f < 4; ++f) {
      if (fw[f] != top) continue;
      ReductionStep step = apply_reduction(w, static_cast<Facet>(f));
      const auto& sub = reachable_impl(step.after, memo);
      out.insert(sub.begin(), sub.end());
    }
  }
  return memo[w] = std::move(out);
}

}  // namespace

std::set<WeightVector> reachable_minimal_curves(const WeightVector& w) {
  std::map<WeightVector, std::set<WeightVector>> memo;
  return reachable_impl(w, memo);
}

SweepReport tie_break_sweep(Int max_entry, ExecPolicy policy) {
  const Int n = weight_vector_count(max_entry);
  auto at = [&](Int idx) { return weight_vector_at(idx, max_entry); };
  return run_indexed(n, policy, at, [&](Int idx, SweepReport& report) {
    WeightVector w = weight_vector_at(idx, max_entry);
    ++report.cases;
    std::set<WeightVector> results = reachable_minimal_curves(w);
    if (results.size() > 1)
      report.issues.push_back(
          {w, "maximal-facet choices reach " + std::to_string(results.size()) +
                  " distinct minimal curves"});
  });
}

bool VerifyReport::ok() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const VerifyCheck& c) { return c.ok; });
}

VerifyReport verify_battery(const WeightVector& w, const OracleCaps& caps) {
  VerifyReport report;
  auto add = [&](std::string name, bool ok, std::string detail) {
    report.checks.push_back({std::move(name), ok, std::move(detail)});
  };

  ReductionTrace trace = reduce_to_minimal(w);
  bool steps_ok = true;
  for (const ReductionStep& step : trace.steps)
    if (!bdl_check(step)) {
      steps_ok = false;
      break;
    }
  add("descent", steps_ok,
      std::to_string(trace.steps.size()) + " reduction(s) to " +
          to_string(trace.result));

  const WeightVector& r = trace.result;
  if (r.is_zero()) {
    add("generators", true, "trivial curve, nothing to compare");
  } else {
    MonomialIdeal cut = minimal_generators(r);
    MonomialIdeal oracle = tetrahedral_ideal(r);
    bool same = cut == oracle;
    Int s = initial_degree(r);
    bool degrees = std::all_of(oracle.gens.begin(), oracle.gens.end(),
                               [&](const Monomial& m) { return m.degree() == s; });
    add("generators", same && degrees,
        std::to_string(oracle.gens.size()) + " generator(s) in degree " +
            std::to_string(s));

    GradedBetti gb = graded_betti(oracle, caps);
    BettiTable closed = betti_numbers(r);
    add("betti", gb.by_total_degree() == closed, to_string(closed));

    CellularResolution res = cellular_differentials(r);
    add("chain", composes_to_zero(res.d1, res.d2), "d1 * d2 = 0");
  }

  HilbertData data = curve_hilbert_data(w, caps);
  bool degree_ok = data.degree == degree(w);
  bool genus_ok = true;
  std::string genus_note;
  if (!w.is_zero() && is_s_minimal(w)) {
    genus_ok = data.genus == genus_minimal(w);
    genus_note = ", genus " + std::to_string(data.genus);
  }
  add("hilbert", degree_ok && genus_ok,
      "degree " + std::to_string(data.degree) + genus_note);

  if (!r.is_zero()) {
    HilbertData rdata = curve_hilbert_data(r, caps);
    BettiTable betti = betti_numbers(r);
    Int s = initial_degree(r);
    bool closed_ok = true;
    for (const auto& [t, value] : rdata.values)
      if (Int128{value} != resolution_hilbert(betti, s, t)) {
        closed_ok = false;
        break;
      }
    add("hilbert-closed-form", closed_ok,
        "alternating sum over " + std::to_string(rdata.values.size()) + " degree(s)");
  }
  return report;
}

}  // namespace tetra
