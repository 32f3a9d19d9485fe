#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "planeval/cremona.hpp"

namespace planeval {

// Position of a class against a hyperplane xi . D = 0.
enum class HalfSpaceSide { NonNegative, NonPositive, Both };

inline const char* side_name(HalfSpaceSide s) {
  switch (s) {
    case HalfSpaceSide::NonNegative: return ">=0";
    case HalfSpaceSide::NonPositive: return "<=0";
    case HalfSpaceSide::Both: return "boundary";
  }
  return "?";
}

inline HalfSpaceSide side_of(const QuadNum& pairing) {
  int s = pairing.sign();
  if (s == 0) return HalfSpaceSide::Both;
  return s > 0 ? HalfSpaceSide::NonNegative : HalfSpaceSide::NonPositive;
}

// The de Fernex class D_n = (sqrt(n-1); 1^n); D_n^2 = -1.
inline DivisorClass de_fernex_class(int n) {
  if (n < 1) fail(Errc::InvalidParameter, "de Fernex class needs n >= 1");
  DivisorClass c;
  c.d = *qn_sqrt(QuadNum(n - 1));
  c.m.assign(n, QuadNum(1));
  return c;
}

inline DivisorClass nagata_class(int n) {
  DivisorClass c;
  c.d = *qn_sqrt(QuadNum(n));
  c.m.assign(n, QuadNum(1));
  return c;
}

struct ConeReport {
  DivisorClass cls;
  QuadNum L_pairing;     // xi . L, i.e. the degree
  QuadNum self_pairing;  // xi . xi
  bool in_Q;             // nonnegative cone: both pairings >= 0
  bool on_boundary_Q;    // in Q with xi . xi = 0
  HalfSpaceSide K_side;
  HalfSpaceSide de_fernex_side;
};

inline ConeReport cone_report(const DivisorClass& c) {
  int n = c.n();
  if (n < 1) fail(Errc::InvalidParameter, "cone report needs n >= 1");
  ConeReport r;
  r.cls = c;
  r.L_pairing = pair(c, line_class(n));
  r.self_pairing = pair(c, c);
  r.in_Q = r.L_pairing.sign() >= 0 && r.self_pairing.sign() >= 0;
  r.on_boundary_Q = r.in_Q && r.self_pairing.sign() == 0;
  r.K_side = side_of(pair(c, canonical_class(n)));
  r.de_fernex_side = side_of(pair(c, de_fernex_class(n)));
  return r;
}

// B_{q,p} = (9q^2 + p^2; 9q^2 - p^2, (2qp)^9) on X_10; self-pairing 0.
inline DivisorClass bqp_class(long long q, long long p) {
  if (q < 1 || p < 1 || q > p)
    fail(Errc::InvalidArgs, "bqp needs 1 <= q <= p, got q = " + std::to_string(q) + ", p = " + std::to_string(p));
  Rat q2(Int(q) * q), p2(Int(p) * p);
  DivisorClass c;
  c.d = QuadNum(9 * q2 + p2);
  c.m.push_back(QuadNum(9 * q2 - p2));
  for (int i = 0; i < 9; ++i) c.m.push_back(QuadNum(Rat(2 * Int(q) * p)));
  return c;
}

struct NefResult {
  bool nef;
  std::optional<DivisorClass> witness;  // a (-1)-class met negatively
  QuadNum min_pairing;
};

namespace detail {
// (-1)-class lists per n, built once; read-mostly cache.
inline const std::vector<DivisorClass>& minus_one_cache(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<const std::vector<DivisorClass>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end())
    it = cache.emplace(n, std::make_unique<const std::vector<DivisorClass>>(enumerate_minus_one(n))).first;
  return *it->second;
}
}  // namespace detail

// Nef test against the full list of (-1)-classes; sound exactly for n <= 8,
// where the Mori cone is spanned by them (Del Pezzo range).
inline NefResult nef_test_small(const DivisorClass& c) {
  int n = c.n();
  if (n < 2 || n > 8)
    fail(Errc::UnsupportedN, "nef test is only sound for 2 <= n <= 8, got n = " + std::to_string(n));
  for (const auto& e : c.m)
    if (!e.is_rational()) fail(Errc::InvalidArgs, "nef test needs rational entries");
  if (!c.d.is_rational()) fail(Errc::InvalidArgs, "nef test needs rational entries");
  NefResult res{true, std::nullopt, QuadNum(0)};
  bool first = true;
  for (const auto& e : detail::minus_one_cache(n)) {
    QuadNum v = pair(c, e);
    if (first || v < res.min_pairing) {
      res.min_pairing = v;
      first = false;
    }
    if (v.sign() < 0 && res.nef) {
      res.nef = false;
      res.witness = e;
    }
  }
  return res;
}

// Upper bound 1/sqrt(n) for the Seshadri constant of n very general points,
// returned in the normalized form sqrt(n)/n.
inline QuadNum seshadri_upper_bound(long long n) {
  if (n < 1) fail(Errc::InvalidParameter, "seshadri bound needs n >= 1");
  return QuadNum(n) * (*qn_sqrt(QuadNum(n))).inv() * QuadNum(Rat(1, n));
}

}  // namespace planeval
