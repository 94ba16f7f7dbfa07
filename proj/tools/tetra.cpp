#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include "tetra/cell_complex.hpp"
#include "tetra/classify.hpp"
#include "tetra/errors.hpp"
#include "tetra/invariants.hpp"
#include "tetra/koszul.hpp"
#include "tetra/sweeps.hpp"

namespace {

using nlohmann::json;
using namespace tetra;

struct Options {
  bool as_json = false;
  bool trace = false;
  bool oracle = false;
  bool matrices = false;
  Int cap = 0;
};

OracleCaps caps_from(const Options& opt) {
  OracleCaps caps;
  if (opt.cap > 0) {
    caps.max_betti_generators = opt.cap;
    caps.max_hilbert_degree = opt.cap;
  }
  return caps;
}

WeightVector parse_tuple(const std::vector<std::string>& args) {
  std::string joined;
  for (const std::string& a : args) {
    joined += a;
    joined += ' ';
  }
  return parse_weight_vector(joined);
}

json to_json(const WeightVector& w) {
  json a = json::array();
  for (int i = 0; i < kNumLines; ++i) a.push_back(w[i]);
  return a;
}

json to_json(const ReductionTrace& trace) {
  json steps = json::array();
  for (const ReductionStep& step : trace.steps) {
    json f = json::array();
    for (int v = 0; v < kNumVars; ++v) f.push_back(step.form.e[v]);
    steps.push_back({{"facet", std::string(1, facet_tag(step.facet))},
                     {"F", f},
                     {"G", std::string(1, kVarNames[step.plane_var])},
                     {"after", to_json(step.after)}});
  }
  return steps;
}

json to_json(const BettiTable& table) {
  json rows = json::array();
  for (const auto& [key, rank] : table.entries)
    rows.push_back({{"i", key.first}, {"degree", key.second}, {"rank", rank}});
  return rows;
}

json to_json(const MonomialMatrix& m) {
  json cols = json::array();
  for (const auto& column : m.columns) {
    json col = json::array();
    for (const auto& entry : column)
      col.push_back({{"row", entry.row + 1},
                     {"sign", entry.sign},
                     {"monomial", to_string(entry.factor)}});
    cols.push_back(col);
  }
  return {{"rows", m.rows}, {"cols", m.cols}, {"columns", cols}};
}

std::string resolution_string(const BettiTable& table) {
  // ranks come in homological order 1..3; display right to left
  std::string out = "0";
  for (int i = 3; i >= 1; --i) {
    for (const auto& [key, rank] : table.entries)
      if (key.first == i)
        out += " -> R^" + std::to_string(rank) + "(-" +
               std::to_string(key.second) + ")";
  }
  return out + " -> I -> 0";
}

void print_matrix(const std::string& name, const MonomialMatrix& m) {
  std::cout << name << " (" << m.rows << " x " << m.cols << "):\n";
  for (Int j = 0; j < m.cols; ++j) {
    std::cout << "  column " << (j + 1) << ":";
    for (const auto& entry : m.columns[j])
      std::cout << ' ' << (entry.sign > 0 ? '+' : '-')
                << to_string(entry.factor) << " r" << (entry.row + 1);
    std::cout << '\n';
  }
}

void emit(const std::string& command, const json& input, json result,
          const Options& opt, std::chrono::steady_clock::time_point start,
          json trace = json()) {
  if (!opt.as_json) return;
  OracleCaps caps = caps_from(opt);
  double ms = std::chrono::duration<double, std::milli>(
                  std::chrono::steady_clock::now() - start)
                  .count();
  json record = {{"command", command},
                 {"input", input},
                 {"result", std::move(result)},
                 {"diagnostics",
                  {{"elapsed_ms", ms},
                   {"caps",
                    {{"betti-generators", caps.max_betti_generators},
                     {"hilbert-degree", caps.max_hilbert_degree}}}}}};
  if (!trace.is_null()) record["trace"] = std::move(trace);
  std::cout << record.dump(2) << '\n';
}

int cmd_reduce(const WeightVector& w, const Options& opt) {
  auto start = std::chrono::steady_clock::now();
  ReductionTrace trace = reduce_to_minimal(w);
  if (opt.as_json) {
    emit("reduce", to_json(w),
         {{"minimal", to_json(trace.result)},
          {"reductions", Int(trace.steps.size())}},
         opt, start, to_json(trace));
    return 0;
  }
  if (opt.trace) {
    Int n = 0;
    for (const ReductionStep& step : trace.steps)
      std::cout << "step " << ++n << ": facet " << facet_tag(step.facet)
                << ", F = " << to_string(step.form) << ", G = "
                << kVarNames[step.plane_var] << ", -> "
                << to_string(step.after) << '\n';
  }
  std::cout << "Minimal curve to " << to_string(w) << " is "
            << to_string(trace.result) << '\n';
  std::cout << "It is obtained after " << trace.steps.size()
            << " reduction(s).\n";
  return 0;
}

int cmd_classify(const WeightVector& w, const Options& opt) {
  auto start = std::chrono::steady_clock::now();
  CurveClassification c = classify(w);
  const char* yes = "yes";
  const char* no = "no";
  if (opt.as_json) {
    emit("classify", to_json(w),
         {{"trivial", c.trivial},
          {"s_minimal", c.s_minimal},
          {"acm", c.acm},
          {"buchsbaum", c.buchsbaum},
          {"hr_diameter", to_string(c.hr)},
          {"known_unobstructed", c.unobstructed.known},
          {"family", to_string(c.unobstructed.family)},
          {"linear_resolution",
           c.linear_resolution == LinearResolutionStatus::yes ? "yes"
                                                              : "unknown"},
          {"minimal_curve", to_json(c.minimal_curve)},
          {"reductions", c.reductions}},
         opt, start);
    return 0;
  }
  std::cout << "curve: " << to_string(w) << '\n';
  std::cout << "trivial: " << (c.trivial ? yes : no) << '\n';
  std::cout << "S-minimal: " << (c.s_minimal ? yes : no) << '\n';
  std::cout << "ACM: " << (c.acm ? yes : no) << '\n';
  std::cout << "Buchsbaum: " << (c.buchsbaum ? yes : no) << '\n';
  std::cout << "Hartshorne-Rao diameter: " << to_string(c.hr) << '\n';
  if (c.unobstructed.known)
    std::cout << "known unobstructed: yes, "
              << to_string(c.unobstructed.family) << '\n';
  else
    std::cout << "known unobstructed: no\n";
  std::cout << "linear resolution: "
            << (c.linear_resolution == LinearResolutionStatus::yes
                    ? "yes"
                    : "unknown")
            << '\n';
  std::cout << "minimal curve: " << to_string(c.minimal_curve) << " after "
            << c.reductions << " reduction(s)\n";
  return 0;
}

int cmd_gens(const WeightVector& w, const Options& opt) {
  auto start = std::chrono::steady_clock::now();
  MonomialIdeal ideal = opt.oracle ? tetrahedral_ideal(w) : minimal_generators(w);
  if (opt.as_json) {
    json gens = json::array();
    for (const Monomial& g : ideal.gens) gens.push_back(to_string(g));
    emit("gens", to_json(w),
         {{"count", Int(ideal.gens.size())}, {"generators", std::move(gens)}},
         opt, start);
    return 0;
  }
  std::cout << "curve: " << to_string(w) << '\n';
  std::cout << ideal.gens.size() << " minimal generator(s)\n";
  for (const Monomial& g : ideal.gens) std::cout << "  " << to_string(g) << '\n';
  return 0;
}

int cmd_betti(const WeightVector& w, const Options& opt) {
  auto start = std::chrono::steady_clock::now();
  if (opt.oracle) {
    if (opt.matrices)
      throw std::invalid_argument("--matrices needs the cellular route");
    BettiTable table = graded_betti(tetrahedral_ideal(w), caps_from(opt))
                           .by_total_degree();
    if (opt.as_json) {
      emit("betti", to_json(w),
           {{"betti", to_json(table)},
            {"resolution", resolution_string(table)}},
           opt, start);
      return 0;
    }
    std::cout << "curve: " << to_string(w) << '\n';
    std::cout << to_string(table) << '\n';
    std::cout << "resolution: " << resolution_string(table) << '\n';
    return 0;
  }
  CellularResolution res = cellular_differentials(w);
  if (opt.as_json) {
    json result = {{"betti", to_json(res.betti)},
                   {"resolution", resolution_string(res.betti)}};
    if (opt.matrices) {
      result["d1"] = to_json(res.d1);
      result["d2"] = to_json(res.d2);
    }
    emit("betti", to_json(w), std::move(result), opt, start);
    return 0;
  }
  std::cout << "curve: " << to_string(w) << '\n';
  std::cout << to_string(res.betti) << '\n';
  std::cout << "resolution: " << resolution_string(res.betti) << '\n';
  if (opt.matrices) {
    print_matrix("d1", res.d1);
    print_matrix("d2", res.d2);
  }
  return 0;
}

int cmd_invariants(const WeightVector& w, const Options& opt) {
  auto start = std::chrono::steady_clock::now();
  OracleCaps caps = caps_from(opt);
  Int deg = degree(w);
  bool minimal = is_s_minimal(w) && !w.is_zero();
  Int g = w.is_zero() ? 1 : genus(w, caps);
  if (opt.as_json) {
    json result = {{"degree", deg}, {"genus", g}, {"s_minimal", minimal}};
    if (minimal) result["initial_degree"] = initial_degree(w);
    emit("invariants", to_json(w), std::move(result), opt, start);
    return 0;
  }
  std::cout << "curve: " << to_string(w) << '\n';
  std::cout << "degree: " << deg << '\n';
  std::cout << "genus: " << g << '\n';
  if (minimal) std::cout << "initial degree: " << initial_degree(w) << '\n';
  return 0;
}

int cmd_enumerate(Int m, const Options& opt) {
  auto start = std::chrono::steady_clock::now();
  std::vector<WeightVector> curves = enumerate_minimal(m);
  Int count = count_minimal(m);
  if (count != Int(curves.size()))
    throw VerificationError("closed-form count disagrees with enumeration");
  if (opt.as_json) {
    json list = json::array();
    for (const WeightVector& w : curves) list.push_back(to_json(w));
    emit("enumerate", m, {{"count", count}, {"curves", std::move(list)}}, opt,
         start);
    return 0;
  }
  std::cout << "N(" << m << ") = " << count << '\n';
  for (const WeightVector& w : curves) std::cout << to_string(w) << '\n';
  return 0;
}

int cmd_verify_curve(const WeightVector& w, const Options& opt) {
  auto start = std::chrono::steady_clock::now();
  VerifyReport report = verify_battery(w, caps_from(opt));
  if (opt.as_json) {
    json checks = json::array();
    for (const VerifyCheck& c : report.checks)
      checks.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
    emit("verify", to_json(w),
         {{"checks", std::move(checks)}, {"ok", report.ok()}}, opt, start);
    return report.ok() ? 0 : 1;
  }
  std::cout << "verify " << to_string(w) << '\n';
  Int failed = 0;
  for (const VerifyCheck& c : report.checks) {
    if (c.ok) {
      std::cout << "  [ok] " << c.name << '\n';
    } else {
      ++failed;
      std::cout << "  [FAIL] " << c.name << ": " << c.detail << '\n';
    }
  }
  if (failed == 0)
    std::cout << "all checks passed\n";
  else
    std::cout << failed << " check(s) failed\n";
  return failed == 0 ? 0 : 1;
}

int cmd_verify_sweeps(Int m, const Options& opt) {
  auto start = std::chrono::steady_clock::now();
  OracleCaps caps = caps_from(opt);
  struct Row {
    std::string name;
    SweepReport report;
  };
  std::vector<Row> rows;
  rows.push_back({"bdl", bdl_sweep(m, ExecPolicy::parallel)});
  rows.push_back({"generators", generator_sweep(m, ExecPolicy::parallel)});
  rows.push_back({"betti", betti_sweep(m, ExecPolicy::parallel, caps)});
  rows.push_back({"hilbert", hilbert_sweep(m, ExecPolicy::parallel, caps)});
  rows.push_back({"cell", cell_sweep(m, ExecPolicy::parallel)});
  bool ok = true;
  for (const Row& row : rows) ok = ok && row.report.ok();
  if (opt.as_json) {
    json sweeps = json::array();
    for (const Row& row : rows) {
      json issues = json::array();
      for (const SweepIssue& issue : row.report.issues)
        issues.push_back({{"w", to_json(issue.w)}, {"what", issue.what}});
      sweeps.push_back({{"name", row.name},
                        {"cases", row.report.cases},
                        {"issues", std::move(issues)}});
    }
    emit("verify", m, {{"sweeps", std::move(sweeps)}, {"ok", ok}}, opt, start);
    return ok ? 0 : 1;
  }
  std::cout << "verify sweeps at max entry " << m << '\n';
  for (const Row& row : rows) {
    if (row.report.ok()) {
      std::cout << "  [ok] " << row.name << " (" << row.report.cases
                << " cases)\n";
    } else {
      std::cout << "  [FAIL] " << row.name << " (" << row.report.cases
                << " cases, " << row.report.issues.size() << " issue(s))\n";
      for (const SweepIssue& issue : row.report.issues)
        std::cout << "    " << to_string(issue.w) << ": " << issue.what
                  << '\n';
    }
  }
  std::cout << (ok ? "all sweeps passed\n" : "sweeps failed\n");
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tetrahedral curves: reduction, classification, resolutions"};
  app.require_subcommand(1);

  Options opt;
  app.add_flag("--json", opt.as_json, "machine-readable output");
  app.add_flag("--trace", opt.trace, "print every reduction step");
  app.add_option("--cap", opt.cap,
                 "override both oracle caps (generators and degree)");
  app.fallthrough();

  std::vector<std::string> reduce_args, classify_args, gens_args, betti_args,
      invariants_args, verify_args;
  Int enumerate_m = 0;

  CLI::App* reduce = app.add_subcommand("reduce", "descend to the S-minimal curve");
  reduce->add_option("weights", reduce_args, "six weights")->required();

  CLI::App* classify_cmd = app.add_subcommand("classify", "ACM/Buchsbaum/diameter report");
  classify_cmd->add_option("weights", classify_args, "six weights")->required();

  CLI::App* gens = app.add_subcommand("gens", "minimal generators of the curve ideal");
  gens->add_option("weights", gens_args, "six weights")->required();
  gens->add_flag("--oracle", opt.oracle, "use the intersection oracle route");

  CLI::App* betti = app.add_subcommand("betti", "Betti numbers and differentials");
  betti->add_option("weights", betti_args, "six weights")->required();
  betti->add_flag("--matrices", opt.matrices, "print the two differentials");
  betti->add_flag("--oracle", opt.oracle, "use the Koszul homology route");

  CLI::App* invariants = app.add_subcommand("invariants", "degree and genus");
  invariants->add_option("weights", invariants_args, "six weights")->required();

  CLI::App* enumerate_cmd =
      app.add_subcommand("enumerate", "S-minimal curves with maximal weight m");
  enumerate_cmd->add_option("m", enumerate_m, "maximal weight")->required();

  CLI::App* verify = app.add_subcommand(
      "verify", "oracle cross-checks for one curve (six weights) or a sweep (one bound)");
  verify->add_option("args", verify_args, "six weights or one bound")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (reduce->parsed()) return cmd_reduce(parse_tuple(reduce_args), opt);
    if (classify_cmd->parsed())
      return cmd_classify(parse_tuple(classify_args), opt);
    if (gens->parsed()) return cmd_gens(parse_tuple(gens_args), opt);
    if (betti->parsed()) return cmd_betti(parse_tuple(betti_args), opt);
    if (invariants->parsed())
      return cmd_invariants(parse_tuple(invariants_args), opt);
    if (enumerate_cmd->parsed()) return cmd_enumerate(enumerate_m, opt);
    if (verify->parsed()) {
      if (verify_args.size() == 1 &&
          verify_args[0].find_first_not_of("0123456789") == std::string::npos)
        return cmd_verify_sweeps(std::stoll(verify_args[0]), opt);
      return cmd_verify_curve(parse_tuple(verify_args), opt);
    }
  } catch (const CapExceededError& e) {
    std::cerr << "cap exceeded: " << e.what() << '\n';
    return 3;
  } catch (const VerificationError& e) {
    std::cerr << "verification failed: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::overflow_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
