#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "planeval/poly2.hpp"

namespace planeval {

namespace fpun {

// Univariate polynomials over F_p, little-endian coefficient vectors.
using Poly = std::vector<std::uint64_t>;

inline void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline Poly mul(const Poly& f, const Poly& g, std::uint64_t p) {
  if (f.empty() || g.empty()) return {};
  Poly r(f.size() + g.size() - 1, 0);
  for (size_t i = 0; i < f.size(); ++i) {
    if (f[i] == 0) continue;
    for (size_t j = 0; j < g.size(); ++j) r[i + j] = (r[i + j] + static_cast<unsigned __int128>(f[i]) * g[j]) % p;
  }
  trim(r);
  return r;
}

inline Poly mod(Poly f, const Poly& g, std::uint64_t p) {
  trim(f);
  std::uint64_t lead_inv = invmod_u64(g.back(), p);
  while (f.size() >= g.size()) {
    std::uint64_t c = mulmod_u64(f.back(), lead_inv, p);
    size_t shift = f.size() - g.size();
    for (size_t i = 0; i < g.size(); ++i) {
      std::uint64_t sub = mulmod_u64(c, g[i], p);
      f[shift + i] = (f[shift + i] + p - sub) % p;
    }
    trim(f);
    if (f.empty()) break;
  }
  return f;
}

inline Poly powmod(Poly base, std::uint64_t e, const Poly& m, std::uint64_t p) {
  Poly r{1};
  base = mod(std::move(base), m, p);
  while (e) {
    if (e & 1) r = mod(mul(r, base, p), m, p);
    base = mod(mul(base, base, p), m, p);
    e >>= 1;
  }
  return r;
}

inline Poly gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    std::uint64_t inv = invmod_u64(a.back(), p);
    for (auto& c : a) c = mulmod_u64(c, inv, p);
  }
  return a;
}

// All roots in F_p of f, via gcd with y^p - y and Cantor-Zassenhaus splitting.
inline void roots_into(const Poly& f, std::uint64_t p, std::mt19937_64& rng, std::vector<std::uint64_t>& out) {
  if (f.size() == 1) return;
  if (f.size() == 2) {
    // c0 + c1 y = 0
    out.push_back(mulmod_u64(p - f[0] % p, invmod_u64(f[1], p), p));
    return;
  }
  // split with gcd((y + r)^((p-1)/2) - 1, f)
  for (int attempt = 0; attempt < 128; ++attempt) {
    std::uint64_t r = rng() % p;
    Poly w = powmod(Poly{r, 1}, (p - 1) / 2, f, p);
    if (w.empty())
      w = Poly{p - 1};
    else
      w[0] = (w[0] + p - 1) % p;
    trim(w);
    Poly g = gcd(w, f, p);
    if (g.size() > 1 && g.size() < f.size()) {
      roots_into(g, p, rng, out);
      // f / g
      Poly q;
      {
        Poly rem = f;
        std::uint64_t lead_inv = invmod_u64(g.back(), p);
        q.assign(f.size() - g.size() + 1, 0);
        while (rem.size() >= g.size()) {
          std::uint64_t c = mulmod_u64(rem.back(), lead_inv, p);
          size_t shift = rem.size() - g.size();
          q[shift] = c;
          for (size_t i = 0; i < g.size(); ++i) {
            std::uint64_t sub = mulmod_u64(c, g[i], p);
            rem[shift + i] = (rem[shift + i] + p - sub) % p;
          }
          trim(rem);
          if (rem.empty()) break;
        }
        trim(q);
      }
      roots_into(q, p, rng, out);
      return;
    }
  }
  fail(Errc::DegenerateConfig, "root splitting failed to converge");
}

inline std::vector<std::uint64_t> roots(Poly f, std::uint64_t p, std::mt19937_64& rng) {
  trim(f);
  std::vector<std::uint64_t> out;
  if (f.size() <= 1) return out;
  // keep only the squarefree split part: gcd(f, y^p - y)
  Poly yp = powmod(Poly{0, 1}, p, f, p);  // y^p mod f
  if (yp.size() < 2) yp.resize(2, 0);
  yp[1] = (yp[1] + p - 1) % p;  // y^p - y
  trim(yp);
  Poly split = gcd(yp, f, p);
  if (split.size() <= 1) return out;
  roots_into(split, p, rng, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace fpun

enum class ConfigKind { General, OnLine, OnConic, OnCubic, OnCurve };

inline const char* config_kind_name(ConfigKind k) {
  switch (k) {
    case ConfigKind::General: return "general";
    case ConfigKind::OnLine: return "online";
    case ConfigKind::OnConic: return "onconic";
    case ConfigKind::OnCubic: return "oncubic";
    case ConfigKind::OnCurve: return "oncurve";
  }
  return "?";
}

// n affine points over F_p, pairwise distinct, drawn deterministically from
// the seed: uniformly (General), on a random line, on the conic y = x^2, on
// the cubic y^2 = x^3 + a x + b, or on a random curve of given degree.
struct PointConfig {
  ConfigKind kind = ConfigKind::General;
  int n = 0;
  std::uint64_t prime = 0;
  std::uint64_t seed = 0;
  int curve_degree = 0;                       // OnCurve
  std::uint64_t cubic_a = 0, cubic_b = 0;     // OnCubic
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pts;
};

inline PointConfig make_point_config(ConfigKind kind, int n, std::uint64_t prime, std::uint64_t seed,
                                     int curve_degree = 4) {
  if (prime <= 1000000 || !is_prime_u64(prime))
    fail(Errc::BadPrime, std::to_string(prime) + " is not a prime > 10^6");
  if (n < 1) fail(Errc::InvalidArgs, "need n >= 1 points");
  PointConfig cfg;
  cfg.kind = kind;
  cfg.n = n;
  cfg.prime = prime;
  cfg.seed = seed;
  cfg.curve_degree = kind == ConfigKind::OnConic ? 2 : (kind == ConfigKind::OnCubic ? 3 : curve_degree);
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  const std::uint64_t p = prime;
  auto draw = [&]() { return rng() % p; };
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pts;
  auto push_distinct = [&](std::uint64_t x, std::uint64_t y) {
    for (const auto& q : pts)
      if (q.first == x && q.second == y) return false;
    pts.emplace_back(x, y);
    return true;
  };
  const int max_tries = 200 * n + 200;
  int tries = 0;
  auto budget = [&]() {
    if (++tries > max_tries) fail(Errc::DegenerateConfig, "could not sample distinct points");
  };

  switch (kind) {
    case ConfigKind::General: {
      while (static_cast<int>(pts.size()) < n) {
        budget();
        push_distinct(draw(), draw());
      }
      break;
    }
    case ConfigKind::OnLine: {
      std::uint64_t slope = draw(), icept = draw();
      while (static_cast<int>(pts.size()) < n) {
        budget();
        std::uint64_t x = draw();
        push_distinct(x, (mulmod_u64(slope, x, p) + icept) % p);
      }
      break;
    }
    case ConfigKind::OnConic: {
      while (static_cast<int>(pts.size()) < n) {
        budget();
        std::uint64_t x = draw();
        push_distinct(x, mulmod_u64(x, x, p));
      }
      break;
    }
    case ConfigKind::OnCubic: {
      cfg.cubic_a = draw();
      cfg.cubic_b = draw();
      while (static_cast<int>(pts.size()) < n) {
        budget();
        std::uint64_t x = draw();
        std::uint64_t rhs =
            (mulmod_u64(mulmod_u64(x, x, p), x, p) + mulmod_u64(cfg.cubic_a, x, p) + cfg.cubic_b) % p;
        auto ys = fpun::roots(fpun::Poly{(p - rhs) % p, 0, 1}, p, rng);
        if (ys.empty()) continue;
        push_distinct(x, ys[rng() % ys.size()]);
      }
      break;
    }
    case ConfigKind::OnCurve: {
      if (cfg.curve_degree < 1) fail(Errc::InvalidArgs, "curve degree must be >= 1");
      // random affine curve of the given degree that genuinely involves y
      std::vector<std::uint64_t> coeffs;  // over monomials (i, j), i + j <= deg
      std::vector<std::pair<int, int>> monos;
      for (int i = 0; i + 0 <= cfg.curve_degree; ++i)
        for (int j = 0; i + j <= cfg.curve_degree; ++j) monos.emplace_back(i, j);
      bool has_y = false;
      while (!has_y) {
        coeffs.clear();
        for (size_t k = 0; k < monos.size(); ++k) coeffs.push_back(draw());
        for (size_t k = 0; k < monos.size(); ++k)
          if (monos[k].second > 0 && coeffs[k] != 0) has_y = true;
      }
      while (static_cast<int>(pts.size()) < n) {
        budget();
        std::uint64_t x = draw();
        // univariate section F(x, y)
        fpun::Poly g(cfg.curve_degree + 1, 0);
        for (size_t k = 0; k < monos.size(); ++k) {
          std::uint64_t c = mulmod_u64(coeffs[k], powmod_u64(x, monos[k].first, p), p);
          g[monos[k].second] = (g[monos[k].second] + c) % p;
        }
        auto ys = fpun::roots(g, p, rng);
        if (ys.empty()) continue;
        push_distinct(x, ys[rng() % ys.size()]);
      }
      break;
    }
  }
  cfg.pts = std::move(pts);
  return cfg;
}

// A fat point interpolation instance: curves of degree d with multiplicity
// at least m_i at the i-th point.
struct InterpProblem {
  PointConfig config;
  long long d = 0;
  std::vector<long long> mult;
};

inline long long condition_count(const std::vector<long long>& mult) {
  long long acc = 0;
  for (long long m : mult) acc += m * (m + 1) / 2;
  return acc;
}

// SHGH right-hand side max{-1, d(d+3)/2 - sum m_i(m_i+1)/2} (projective).
inline long long expected_dimension(long long d, const std::vector<long long>& mult) {
  if (d < 0) fail(Errc::InvalidArgs, "degree must be >= 0");
  for (long long m : mult)
    if (m < 0) fail(Errc::InvalidArgs, "multiplicities must be >= 0");
  return std::max<long long>(-1, d * (d + 3) / 2 - condition_count(mult));
}

namespace detail {

inline int rank_mod_p(std::vector<std::vector<std::uint64_t>>& m, std::uint64_t p) {
  int rows = static_cast<int>(m.size());
  if (rows == 0) return 0;
  int cols = static_cast<int>(m[0].size());
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int piv = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[rank], m[piv]);
    std::uint64_t inv = invmod_u64(m[rank][col], p);
    for (int c = col; c < cols; ++c) m[rank][c] = mulmod_u64(m[rank][c], inv, p);
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m[r][col] == 0) continue;
      std::uint64_t f = m[r][col];
      for (int c = col; c < cols; ++c) {
        std::uint64_t sub = mulmod_u64(f, m[rank][c], p);
        m[r][c] = (m[r][c] + p - sub) % p;
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace detail

// Condition matrix: one row per point q and derivative order (a, b) with
// a + b < m_q, one column per monomial x^i y^j with i + j <= d; the entry is
// C(i,a) C(j,b) x_q^{i-a} y_q^{j-b} (coefficient extraction; p exceeds every
// binomial argument in range).
inline std::vector<std::vector<std::uint64_t>> condition_matrix(const InterpProblem& pr) {
  const auto& cfg = pr.config;
  const std::uint64_t p = cfg.prime;
  if (static_cast<int>(pr.mult.size()) != cfg.n)
    fail(Errc::DimensionMismatch, "multiplicity vector size does not match point count");
  long long d = pr.d;
  if (d < 0) fail(Errc::InvalidArgs, "degree must be >= 0");
  if (static_cast<std::uint64_t>(d) >= p) fail(Errc::BadPrime, "prime must exceed the degree");
  // binomials mod p
  std::vector<std::vector<std::uint64_t>> C(d + 1, std::vector<std::uint64_t>(d + 1, 0));
  for (long long i = 0; i <= d; ++i) {
    C[i][0] = 1;
    for (long long j = 1; j <= i; ++j)
      C[i][j] = (C[i - 1][j - 1] + (j <= i - 1 ? C[i - 1][j] : 0)) % p;
  }
  std::vector<std::pair<long long, long long>> monos;
  for (long long i = 0; i <= d; ++i)
    for (long long j = 0; i + j <= d; ++j) monos.emplace_back(i, j);
  std::vector<std::vector<std::uint64_t>> rows;
  long long total_rows = condition_count(pr.mult);
  if (total_rows * static_cast<long long>(monos.size()) > 80000000)
    fail(Errc::ResourceLimit, "condition matrix would exceed the size guard");
  rows.reserve(total_rows);
  for (int q = 0; q < cfg.n; ++q) {
    long long mq = pr.mult[q];
    if (mq < 0) fail(Errc::InvalidArgs, "multiplicities must be >= 0");
    if (mq == 0) continue;
    std::uint64_t x = cfg.pts[q].first, y = cfg.pts[q].second;
    // powers up to d
    std::vector<std::uint64_t> xp(d + 1, 1), yp(d + 1, 1);
    for (long long e = 1; e <= d; ++e) {
      xp[e] = mulmod_u64(xp[e - 1], x, p);
      yp[e] = mulmod_u64(yp[e - 1], y, p);
    }
    for (long long a = 0; a < mq; ++a)
      for (long long b = 0; a + b < mq; ++b) {
        std::vector<std::uint64_t> row(monos.size(), 0);
        for (size_t k = 0; k < monos.size(); ++k) {
          auto [i, j] = monos[k];
          if (i < a || j < b) continue;
          std::uint64_t v = mulmod_u64(C[i][a], C[j][b], p);
          v = mulmod_u64(v, xp[i - a], p);
          v = mulmod_u64(v, yp[j - b], p);
          row[k] = v;
        }
        rows.push_back(std::move(row));
      }
  }
  return rows;
}

struct DimensionResult {
  long long vdim;     // dim of the degree-d piece of the ideal (vector space)
  long long projdim;  // vdim - 1
};

inline DimensionResult dimension(const InterpProblem& pr) {
  long long unknowns = (pr.d + 1) * (pr.d + 2) / 2;
  auto rows = condition_matrix(pr);
  long long rank = detail::rank_mod_p(rows, pr.config.prime);
  return DimensionResult{unknowns - rank, unknowns - rank - 1};
}

inline bool is_special(const InterpProblem& pr, const DimensionResult& r) {
  return r.projdim != expected_dimension(pr.d, pr.mult);
}

// Smallest d <= d_max with a nonzero form, reusing the point data.
inline std::optional<long long> alpha(const PointConfig& cfg, const std::vector<long long>& mult,
                                      long long d_max = 100) {
  for (long long d = 0; d <= d_max; ++d) {
    InterpProblem pr{cfg, d, mult};
    if (dimension(pr).vdim > 0) return d;
  }
  return std::nullopt;
}

// Subadditive upper bounds alpha(I(m Z_v))/m for m = 1..m_max.
inline std::vector<Rat> waldschmidt_upper(const PointConfig& cfg, const std::vector<long long>& mult,
                                          int m_max = 6, long long d_max = 100) {
  std::vector<Rat> out;
  for (int m = 1; m <= m_max; ++m) {
    std::vector<long long> scaled(mult);
    for (auto& v : scaled) v *= m;
    auto a = alpha(cfg, scaled, d_max);
    if (!a) fail(Errc::ResourceLimit, "alpha not found below d_max = " + std::to_string(d_max));
    out.emplace_back(Rat(*a, m));
  }
  return out;
}

}  // namespace planeval
