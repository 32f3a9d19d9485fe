#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "planeval/rat.hpp"

namespace planeval {

enum class Normalization { UnitValue, UnitLast };

// Finitely many infinitely near points p_1, ..., p_s with weights v_i.
// Point i (0-based) is proximate to its predecessor i-1 and to at most one
// earlier point extra[i]; clusters of quasimonomial valuations have exactly
// this chain-plus-satellite shape. Stored proximities make the proximity
// matrix lower unitriangular with -1 entries at recorded pairs.
struct WeightedCluster {
  int s = 0;
  std::vector<int> extra;  // 0-based second parent, or -1
  std::vector<Rat> v;      // weights
  std::vector<Int> cf;     // continued fraction terms of t
  Rat t;
  Normalization norm = Normalization::UnitValue;

  // i proximate to j, 0-based
  bool proximate(int i, int j) const {
    if (i <= j) return false;
    return j == i - 1 || extra[i] == j;
  }

  std::vector<int> proximate_to(int j) const {
    std::vector<int> out;
    if (j + 1 < s) out.push_back(j + 1);
    for (int i = j + 2; i < s; ++i)
      if (extra[i] == j) out.push_back(i);
    return out;
  }

  Rat sum_of_squares() const {
    Rat acc = 0;
    for (const auto& w : v) acc += w * w;
    return acc;
  }

  Rat volume() const { return 1 / sum_of_squares(); }

  // v_j = sum of weights proximate to p_j; holds at every j < s for clusters
  // of valuations and fails at j = s.
  bool proximity_equality_at(int j) const {
    Rat acc = 0;
    for (int i : proximate_to(j)) acc += v[i];
    return acc == v[j];
  }
};

// Cluster of centers of the quasimonomial valuation with parameter t > 1,
// built from the continued fraction t = [n_1; n_2, ..., n_r]. The cluster
// has s = sum n_j centers; group j carries the j-th Euclidean remainder of
// (numerator, denominator) as its weight. UnitValue rescales to v(p) = 1,
// UnitLast to v_s = 1 (the divisorial convention).
inline WeightedCluster cluster_from_cf(const Rat& t, Normalization norm) {
  if (t <= 1) fail(Errc::InvalidParameter, "cluster parameter needs t > 1, got " + rat_str(t));
  WeightedCluster c;
  c.t = t;
  c.norm = norm;
  Int r_prev = numerator(t), r_cur = denominator(t);
  std::vector<Int> remainders;  // r_1 = denominator, r_2, ..., r_last = 1
  Int total = 0;
  while (r_cur != 0) {
    Int n = r_prev / r_cur;
    c.cf.push_back(n);
    remainders.push_back(r_cur);
    total += n;
    if (total > 100000) fail(Errc::ResourceLimit, "cluster would have more than 100000 centers");
    Int r_next = r_prev % r_cur;
    r_prev = r_cur;
    r_cur = r_next;
  }
  c.s = total.convert_to<int>();
  Rat scale = norm == Normalization::UnitValue ? Rat(remainders.front()) : Rat(remainders.back());
  c.v.reserve(c.s);
  for (size_t g = 0; g < c.cf.size(); ++g) {
    Rat w = Rat(remainders[g]) / scale;
    for (Int i = 0; i < c.cf[g]; ++i) c.v.push_back(w);
  }
  // proximities: group j >= 2 starts right after prefix N_{j-1} and its
  // points up to index N_j + 1 are proximate to p_{N_{j-1}} (the last group
  // has n_r of them, not n_r + 1)
  c.extra.assign(c.s, -1);
  Int prefix = c.cf[0];
  for (size_t g = 1; g < c.cf.size(); ++g) {
    Int group_end = prefix + c.cf[g];  // N_j, 1-based
    Int anchor = prefix;               // N_{j-1}, 1-based
    Int last = group_end + 1;
    if (last > c.s) last = c.s;
    for (Int i = anchor + 2; i <= last; ++i) c.extra[i.convert_to<int>() - 1] = anchor.convert_to<int>() - 1;
    prefix = group_end;
  }
  return c;
}

// A divisor -sum mbar_i E_i supported on the exceptional components, in the
// total transform basis (E_i . E_j = -delta_ij).
struct ContractedDivisor {
  std::vector<Rat> mbar;

  bool operator==(const ContractedDivisor& o) const { return mbar == o.mbar; }
};

// Excess rho_j = mbar_j - sum_{i proximate to j} mbar_i; equals D . Etilde_j.
inline Rat excess(const WeightedCluster& c, const ContractedDivisor& d, int j) {
  Rat acc = d.mbar[j];
  for (int i : c.proximate_to(j)) acc -= d.mbar[i];
  return acc;
}

inline std::vector<Rat> excesses(const WeightedCluster& c, const ContractedDivisor& d) {
  std::vector<Rat> out(c.s);
  for (int j = 0; j < c.s; ++j) out[j] = excess(c, d, j);
  return out;
}

inline bool relatively_nef(const WeightedCluster& c, const ContractedDivisor& d) {
  for (int j = 0; j < c.s; ++j)
    if (excess(c, d, j) < 0) return false;
  return true;
}

// Strict transform coefficients: D = sum coeff_i Etilde_i, where
// Etilde_j = E_j - sum_{i proximate to j} E_i. Input is the E-basis
// coefficient vector of D (coefficient of E_i, signed).
inline std::vector<Rat> strict_coeffs_from_total(const WeightedCluster& c, const std::vector<Rat>& e_coeffs) {
  std::vector<Rat> out(c.s);
  for (int i = 0; i < c.s; ++i) {
    Rat acc = e_coeffs[i];
    if (i > 0) acc += out[i - 1];
    if (c.extra[i] >= 0) acc += out[c.extra[i]];
    out[i] = acc;
  }
  return out;
}

inline std::vector<Rat> total_coeffs_from_strict(const WeightedCluster& c, const std::vector<Rat>& s_coeffs) {
  std::vector<Rat> out(c.s, Rat(0));
  for (int j = 0; j < c.s; ++j) {
    out[j] += s_coeffs[j];
    for (int i : c.proximate_to(j)) out[i] -= s_coeffs[j];
  }
  return out;
}

// Etilde_i . Etilde_j (negative definite).
inline Rat strict_pairing(const WeightedCluster& c, int i, int j) {
  // Etilde_i = E_i - sum_{a>i proximate} E_a; pairing is minus the dot
  // product of the proximity matrix columns
  Rat acc = 0;
  auto col = [&](int idx, int row) -> int {
    if (row == idx) return 1;
    return c.proximate(row, idx) ? -1 : 0;
  };
  for (int row = 0; row < c.s; ++row) acc -= Rat(col(i, row) * col(j, row));
  return acc;
}

struct UnloadStep {
  int j;  // 0-based index that received a unit
  std::vector<Rat> mbar_after;
};

struct UnloadResult {
  ContractedDivisor divisor;
  std::vector<UnloadStep> steps;
};

// Unloading: while some excess rho_j < 0, replace D by D - Etilde_j (add one
// unit at p_j, remove one from every point proximate to it). Terminates with
// all excesses >= 0; the result does not depend on the order in which
// violated indices are processed. pick selects among the violated indices.
inline UnloadResult unload(const WeightedCluster& c, const ContractedDivisor& start,
                           const std::function<int(const std::vector<int>&)>& pick = {},
                           bool record_steps = false, long long max_steps = 10000000) {
  if (static_cast<int>(start.mbar.size()) != c.s)
    fail(Errc::DimensionMismatch, "divisor has " + std::to_string(start.mbar.size()) + " coefficients, cluster has " +
                                      std::to_string(c.s));
  UnloadResult res;
  res.divisor = start;
  long long steps = 0;
  while (true) {
    std::vector<int> violated;
    for (int j = 0; j < c.s; ++j)
      if (excess(c, res.divisor, j) < 0) violated.push_back(j);
    if (violated.empty()) break;
    int j = pick ? violated[pick(violated) % violated.size()] : violated.front();
    res.divisor.mbar[j] += 1;
    for (int i : c.proximate_to(j)) res.divisor.mbar[i] -= 1;
    if (record_steps) res.steps.push_back(UnloadStep{j, res.divisor.mbar});
    if (++steps > max_steps)
      fail(Errc::NonTermination, "unloading exceeded " + std::to_string(max_steps) + " steps at t = " +
                                     rat_str(c.t) + "; start is likely far from any relatively nef divisor");
  }
  return res;
}

// D_v = -(sum v_i^2)^{-1} sum v_i E_i: the unique contracted divisor with
// D_v . Etilde_i = 0 for i < s and D_v . E_s = v_s / sum v_i^2.
inline ContractedDivisor valuation_divisor(const WeightedCluster& c) {
  for (int j = 0; j + 1 < c.s; ++j)
    if (!c.proximity_equality_at(j))
      fail(Errc::InvalidCluster,
           "proximity equality fails at point " + std::to_string(j + 1) + "; weights do not come from a valuation");
  Rat m0 = c.sum_of_squares();
  ContractedDivisor d;
  d.mbar.reserve(c.s);
  for (const auto& w : c.v) d.mbar.push_back(w / m0);
  return d;
}

struct ZariskiDecomposition {
  ContractedDivisor positive;          // P = D - N
  ContractedDivisor negative;          // N, in the same -sum mbar E basis
  std::vector<Rat> negative_strict;    // N = sum a_i Etilde_i, a_i >= 0
};

namespace detail {

// Solve M x = b over Q by Gaussian elimination; M must be invertible.
inline std::vector<Rat> solve_linear(std::vector<std::vector<Rat>> M, std::vector<Rat> b) {
  int n = static_cast<int>(M.size());
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int row = col; row < n; ++row)
      if (M[row][col] != 0) {
        piv = row;
        break;
      }
    if (piv < 0) fail(Errc::InvalidCluster, "singular intersection matrix");
    std::swap(M[col], M[piv]);
    std::swap(b[col], b[piv]);
    for (int row = 0; row < n; ++row) {
      if (row == col || M[row][col] == 0) continue;
      Rat f = M[row][col] / M[col][col];
      for (int k = col; k < n; ++k) M[row][k] -= f * M[col][k];
      b[row] -= f * b[col];
    }
  }
  std::vector<Rat> x(n);
  for (int i = 0; i < n; ++i) x[i] = b[i] / M[i][i];
  return x;
}

}  // namespace detail

// Relative Zariski decomposition D = P + N: P relatively nef, N effective
// supported on strict transforms with P . Etilde_i = 0 on its support.
// Computed by growing the support of N and solving the (negative definite)
// Gram system of the strict transforms.
inline ZariskiDecomposition relative_zariski(const WeightedCluster& c, const ContractedDivisor& d) {
  if (static_cast<int>(d.mbar.size()) != c.s)
    fail(Errc::DimensionMismatch, "divisor size mismatch");
  std::vector<Rat> d_dot(c.s);  // D . Etilde_j = rho_j
  for (int j = 0; j < c.s; ++j) d_dot[j] = excess(c, d, j);
  std::vector<bool> in_support(c.s, false);
  std::vector<Rat> a(c.s, Rat(0));
  while (true) {
    std::vector<int> support;
    for (int j = 0; j < c.s; ++j)
      if (in_support[j]) support.push_back(j);
    if (!support.empty()) {
      int k = static_cast<int>(support.size());
      std::vector<std::vector<Rat>> gram(k, std::vector<Rat>(k));
      std::vector<Rat> rhs(k);
      for (int r = 0; r < k; ++r) {
        for (int cidx = 0; cidx < k; ++cidx) gram[r][cidx] = strict_pairing(c, support[r], support[cidx]);
        rhs[r] = d_dot[support[r]];
      }
      std::vector<Rat> sol = detail::solve_linear(gram, rhs);
      a.assign(c.s, Rat(0));
      for (int r = 0; r < k; ++r) a[support[r]] = sol[r];
    }
    // P = D - sum a_i Etilde_i; check P . Etilde_j >= 0 for all j
    bool grew = false;
    for (int j = 0; j < c.s; ++j) {
      if (in_support[j]) continue;
      Rat p_dot = d_dot[j];
      for (int i = 0; i < c.s; ++i)
        if (a[i] != 0) p_dot -= a[i] * strict_pairing(c, i, j);
      if (p_dot < 0) {
        in_support[j] = true;
        grew = true;
      }
    }
    if (!grew) break;
  }
  ZariskiDecomposition z;
  z.negative_strict = a;
  std::vector<Rat> n_total = total_coeffs_from_strict(c, a);
  z.negative.mbar.resize(c.s);
  z.positive.mbar.resize(c.s);
  for (int i = 0; i < c.s; ++i) {
    z.negative.mbar[i] = -n_total[i];  // N = sum n_total_i E_i = -sum mbar E_i
    z.positive.mbar[i] = d.mbar[i] - z.negative.mbar[i];
  }
  return z;
}

// dim O_X / I_m for the divisorial valuation of a unit-last cluster:
// unload from (0, ..., 0, m) and apply the codimension formula
// sum mbar_i (mbar_i + 1) / 2.
inline Rat colength(const WeightedCluster& c, const Rat& m) {
  if (m < 0 || !rat_is_integer(m))
    fail(Errc::NonIntegral, "colength needs a nonnegative integer m under unit-last normalization, got " + rat_str(m));
  if (c.v.back() != 1)
    fail(Errc::InvalidCluster, "colength needs the unit-last (divisorial) normalization, v_s = 1");
  ContractedDivisor start;
  start.mbar.assign(c.s, Rat(0));
  start.mbar.back() = m;
  ContractedDivisor d = unload(c, start).divisor;
  Rat acc = 0;
  for (const auto& mi : d.mbar) acc += mi * (mi + 1) / 2;
  return acc;
}

}  // namespace planeval
