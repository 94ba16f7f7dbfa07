#include "tetra/weights.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace tetra {

namespace {

constexpr Int kMaxWeightEntry = 1'000'000'000;

constexpr std::array<FacetInfo, 4> kFacetTable = {{
    {'A', 0, {0, 1, 2}},
    {'B', 1, {0, 3, 4}},
    {'C', 2, {1, 3, 5}},
    {'D', 3, {2, 4, 5}},
}};

int other_var(int line, int pivot) {
  return kLineVars[line][0] == pivot ? kLineVars[line][1] : kLineVars[line][0];
}

// reversed tuple, compared lexicographically to pick the canonical form
std::array<Int, kNumLines> reversed(const WeightVector& w) {
  std::array<Int, kNumLines> r;
  for (int i = 0; i < kNumLines; ++i) r[i] = w[kNumLines - 1 - i];
  return r;
}

}  // namespace

bool WeightVector::is_zero() const {
  return std::all_of(a.begin(), a.end(), [](Int x) { return x == 0; });
}

Int WeightVector::total() const { return std::accumulate(a.begin(), a.end(), Int{0}); }

Int WeightVector::max_entry() const { return *std::max_element(a.begin(), a.end()); }

WeightVector parse_weight_vector(std::string_view text) {
  std::string s(text);
  for (char& c : s)
    if (c == ',' || c == '[' || c == ']' || c == '(' || c == ')') c = ' ';
  std::array<Int, kNumLines> vals;
  std::size_t pos = 0;
  int n = 0;
  while (pos < s.size()) {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos >= s.size()) break;
    if (!std::isdigit(static_cast<unsigned char>(s[pos])))
      throw std::invalid_argument("weight vector entries must be non-negative integers");
    Int v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + (s[pos] - '0');
      if (v > kMaxWeightEntry)
        throw std::invalid_argument("weight entry exceeds the supported range");
      ++pos;
    }
    if (n == kNumLines) throw std::invalid_argument("expected exactly 6 weights");
    vals[n++] = v;
  }
  if (n != kNumLines) throw std::invalid_argument("expected exactly 6 weights");
  WeightVector w;
  w.a = vals;
  return w;
}

std::string to_string(const WeightVector& w) {
  std::string s = "[";
  for (int i = 0; i < kNumLines; ++i) {
    if (i) s += ", ";
    s += std::to_string(w[i]);
  }
  return s + "]";
}

const FacetInfo& facet_info(Facet f) { return kFacetTable[static_cast<int>(f)]; }

char facet_tag(Facet f) { return facet_info(f).tag; }

std::array<Int, 4> facet_weights(const WeightVector& w) {
  std::array<Int, 4> fw;
  for (int f = 0; f < 4; ++f) {
    const auto& lines = kFacetTable[f].lines;
    fw[f] = w[lines[0]] + w[lines[1]] + w[lines[2]];
  }
  return fw;
}

int max_line(const WeightVector& w) {
  int j = 0;
  for (int i = 1; i < kNumLines; ++i)
    if (w[i] > w[j]) j = i;
  return j;
}

Facet max_facet(const WeightVector& w) {
  auto fw = facet_weights(w);
  int k = 0;
  for (int f = 1; f < 4; ++f)
    if (fw[f] > fw[k]) k = f;
  return static_cast<Facet>(k);
}

Int max_facet_weight(const WeightVector& w) {
  auto fw = facet_weights(w);
  return *std::max_element(fw.begin(), fw.end());
}

bool reduction_applies(const WeightVector& w, Facet f) {
  const auto& s = facet_info(f).lines;
  for (int t = 0; t < 3; ++t)
    if (w[s[(t + 1) % 3]] + w[s[(t + 2) % 3]] < w[opposite_line(s[t])]) return false;
  return true;
}

std::vector<Facet> applicable_reductions(const WeightVector& w) {
  if (w.is_zero())
    throw std::invalid_argument("the zero vector admits no reduction");
  std::vector<Facet> out;
  for (Facet f : kFacets)
    if (reduction_applies(w, f)) out.push_back(f);
  return out;
}

ReductionStep apply_reduction(const WeightVector& w, Facet f) {
  if (w.is_zero())
    throw std::invalid_argument("the zero vector admits no reduction");
  if (!reduction_applies(w, f))
    throw std::invalid_argument("reduction system fails for facet " +
                                std::string(1, facet_tag(f)));
  const FacetInfo& info = facet_info(f);
  ReductionStep step;
  step.facet = f;
  step.before = w;
  step.after = w;
  step.plane_var = info.plane_var;
  for (int line : info.lines) {
    step.form.e[other_var(line, info.plane_var)] += w[line];
    if (step.after[line] > 0) --step.after[line];
  }
  return step;
}

bool is_s_minimal(const WeightVector& w) {
  if (w.is_zero()) return true;
  int j = max_line(w);
  return w[j] + w[opposite_line(j)] > max_facet_weight(w);
}

ReductionTrace reduce_to_minimal(const WeightVector& w) {
  ReductionTrace trace{w, {}, w};
  WeightVector cur = w;
  for (;;) {
    int j = max_line(cur);
    if (cur[j] == 0) break;
    Facet k = max_facet(cur);
    if (cur[j] + cur[opposite_line(j)] > facet_weights(cur)[static_cast<int>(k)]) break;
    ReductionStep step = apply_reduction(cur, k);
    cur = step.after;
    trace.steps.push_back(std::move(step));
  }
  trace.result = cur;
  return trace;
}

const std::array<Symmetry, 24>& symmetries() {
  static const std::array<Symmetry, 24> table = [] {
    int pair_index[kNumVars][kNumVars];
    for (int i = 0; i < kNumLines; ++i) {
      pair_index[kLineVars[i][0]][kLineVars[i][1]] = i;
      pair_index[kLineVars[i][1]][kLineVars[i][0]] = i;
    }
    std::array<Symmetry, 24> out;
    std::array<int, kNumVars> perm = {0, 1, 2, 3};
    for (int n = 0; n < 24; ++n) {
      Symmetry s;
      s.var_map = perm;
      for (int i = 0; i < kNumLines; ++i)
        s.line_map[i] = pair_index[perm[kLineVars[i][0]]][perm[kLineVars[i][1]]];
      out[n] = s;
      std::next_permutation(perm.begin(), perm.end());
    }
    return out;
  }();
  return table;
}

Symmetry inverse(const Symmetry& s) {
  Symmetry inv;
  for (int v = 0; v < kNumVars; ++v) inv.var_map[s.var_map[v]] = v;
  for (int i = 0; i < kNumLines; ++i) inv.line_map[s.line_map[i]] = i;
  return inv;
}

WeightVector apply_symmetry(const Symmetry& s, const WeightVector& w) {
  WeightVector out;
  for (int i = 0; i < kNumLines; ++i) out[s.line_map[i]] = w[i];
  return out;
}

Monomial apply_symmetry(const Symmetry& s, const Monomial& m) {
  Monomial out;
  for (int v = 0; v < kNumVars; ++v) out.e[s.var_map[v]] = m.e[v];
  return out;
}

std::vector<WeightVector> orbit(const WeightVector& w) {
  std::vector<WeightVector> out;
  for (const Symmetry& s : symmetries()) out.push_back(apply_symmetry(s, w));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::pair<WeightVector, Symmetry> canonicalize_with_symmetry(const WeightVector& w) {
  const auto& syms = symmetries();
  WeightVector best = w;
  Symmetry best_sym = syms[0];
  auto best_key = reversed(w);
  for (const Symmetry& s : syms) {
    WeightVector img = apply_symmetry(s, w);
    auto key = reversed(img);
    if (key > best_key) {
      best_key = key;
      best = img;
      best_sym = s;
    }
  }
  return {best, best_sym};
}

WeightVector canonicalize(const WeightVector& w) {
  return canonicalize_with_symmetry(w).first;
}

}  // namespace tetra
