#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "planeval/poly2.hpp"
#include "planeval/pwl.hpp"

namespace planeval {

// A plane branch y = xi(x) = sum a_i x^i known up to a truncation order.
// Seeded mode draws the a_i from a seeded PRNG over F_p (Zariski-open
// genericity is all that matters); symbolic mode keeps them as
// indeterminates, certifying answers for every sufficiently general series.
class PlaneSeries {
 public:
  static constexpr std::uint64_t kDefaultPrime = (std::uint64_t(1) << 61) - 1;

  static PlaneSeries seeded(std::uint64_t seed, std::uint64_t prime = kDefaultPrime) {
    PlaneSeries s;
    s.symbolic_ = false;
    s.seed_ = seed;
    s.prime_ = prime;
    return s;
  }

  static PlaneSeries symbolic() {
    PlaneSeries s;
    s.symbolic_ = true;
    return s;
  }

  bool is_symbolic() const { return symbolic_; }
  std::uint64_t seed() const { return seed_; }
  std::uint64_t prime() const { return prime_; }

  // a_i for i = 1..order; prefix-stable under extension of the order.
  std::vector<std::uint64_t> coefficients(int order) const {
    std::mt19937_64 rng(seed_);
    std::vector<std::uint64_t> a(order);
    for (int i = 0; i < order; ++i) a[i] = rng() % (prime_ - 1) + 1;
    return a;
  }

  std::uint64_t coefficient(int i) const { return coefficients(i).back(); }

 private:
  bool symbolic_ = false;
  std::uint64_t seed_ = 0;
  std::uint64_t prime_ = kDefaultPrime;
};

// Monomial valuation v_{s,t}(f) = min { s i + t j : a_ij != 0 }.
inline Rat monomial_value(const Rat& s, const Rat& t, const Poly2<Rat>& f) {
  if (f.zero()) fail(Errc::ZeroPolynomial, "monomial valuation of 0");
  if (s < 0 || t < 0) fail(Errc::InvalidParameter, "monomial weights must be nonnegative");
  bool first = true;
  Rat best;
  for (const auto& [k, c] : f.terms) {
    Rat v = s * Rat(k.first) + t * Rat(k.second);
    if (first || v < best) {
      best = v;
      first = false;
    }
  }
  return best;
}

// Lower-left Newton polygon of f expanded in (x, w), w = y - xi(x).
struct NewtonPolygon {
  std::vector<std::pair<long long, long long>> vertices;  // i increasing, j decreasing
  int certified_order = 0;
};

struct ValueResult {
  QuadNum value;
  int certified_order;
};

namespace detail {

// Vertices of the lower-left hull of conv(S + R_{>=0}^2), by gift wrapping
// from the lexicographically minimal point.
inline std::vector<std::pair<long long, long long>> lower_left_hull(
    std::vector<std::pair<long long, long long>> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::vector<std::pair<long long, long long>> hull;
  // minimal i, then minimal j
  auto cur = pts.front();
  for (const auto& p : pts)
    if (p.first < cur.first || (p.first == cur.first && p.second < cur.second)) cur = p;
  hull.push_back(cur);
  while (true) {
    std::optional<std::pair<long long, long long>> best;
    for (const auto& p : pts) {
      if (p.first <= cur.first || p.second >= cur.second) continue;
      if (!best) {
        best = p;
        continue;
      }
      // steeper slope first; ties go to the farther point
      __int128 lhs = static_cast<__int128>(p.second - cur.second) * (best->first - cur.first);
      __int128 rhs = static_cast<__int128>(best->second - cur.second) * (p.first - cur.first);
      if (lhs < rhs || (lhs == rhs && p.first > best->first)) best = p;
    }
    if (!best) break;
    hull.push_back(*best);
    cur = *best;
  }
  return hull;
}

template <class R>
std::vector<std::pair<long long, long long>> support_of(const Poly2<R>& g) {
  std::vector<std::pair<long long, long long>> pts;
  pts.reserve(g.terms.size());
  for (const auto& [k, c] : g.terms) pts.push_back(k);
  return pts;
}

// Expansion of f(x, y) in (x, w) with xi truncated at the given order.
inline std::vector<std::pair<long long, long long>> expanded_support(const PlaneSeries& xi,
                                                                     const Poly2<Rat>& f, int order) {
  if (xi.is_symbolic()) {
    Poly2<MultiPoly> fs = map_coeffs(f, [](const Rat& c) { return MultiPoly::constant(c); });
    Poly2<MultiPoly> s;
    for (int i = 1; i <= order; ++i) s.add_term(i, 0, MultiPoly::var(i));
    return support_of(substitute_shift(fs, s));
  }
  std::uint64_t p = xi.prime();
  Poly2<Zp> fp = map_coeffs(f, [&](const Rat& c) { return rat_to_zp(c, p); });
  if (fp.zero() && !f.zero()) fail(Errc::BadPrime, "polynomial vanishes mod p");
  auto a = xi.coefficients(order);
  Poly2<Zp> s;
  for (int i = 1; i <= order; ++i) s.add_term(i, 0, Zp{a[i - 1], p});
  return support_of(substitute_shift(fp, s));
}

}  // namespace detail

inline constexpr int kMaxTruncationOrder = 1 << 14;

// Newton polygon with certified truncation order: the hull must be stable
// under one doubling of the order.
inline NewtonPolygon newton_polygon(const PlaneSeries& xi, const Poly2<Rat>& f) {
  if (f.zero()) fail(Errc::ZeroPolynomial, "Newton polygon of 0");
  int order = std::max<long long>(16, 4 * f.total_degree());
  auto hull = detail::lower_left_hull(detail::expanded_support(xi, f, order));
  while (true) {
    int next = order * 2;
    if (next > kMaxTruncationOrder)
      fail(Errc::TruncationCap, "Newton polygon did not stabilize below order " +
                                    std::to_string(kMaxTruncationOrder));
    auto hull2 = detail::lower_left_hull(detail::expanded_support(xi, f, next));
    if (hull2 == hull) return NewtonPolygon{hull, next};
    hull = std::move(hull2);
    order = next;
  }
}

// Legendre transform of the polygon: t -> min over vertices of (i + t j),
// restricted to t >= 1. Concave, piecewise linear, integer coefficients.
inline PiecewiseLinearFn legendre(const NewtonPolygon& np) {
  const auto& v = np.vertices;
  if (v.empty()) fail(Errc::ZeroPolynomial, "empty Newton polygon");
  PiecewiseLinearFn fn;
  QuadNum lo(1);
  for (size_t l = 0; l + 1 < v.size(); ++l) {
    // vertex v[l] is the minimizer on [ -1/slope(l-1), -1/slope(l) ]
    Rat hi(Rat(v[l + 1].first - v[l].first) / Rat(v[l].second - v[l + 1].second));
    if (QuadNum(hi) <= lo) continue;  // piece entirely below t = 1
    fn.pieces.push_back(PwlPiece{lo, QuadNum(hi), false, Rat(v[l].second), Rat(v[l].first)});
    lo = QuadNum(hi);
  }
  fn.pieces.push_back(PwlPiece{lo, QuadNum(0), true, Rat(v.back().second), Rat(v.back().first)});
  return fn;
}

// Exact value of the quasimonomial valuation v_{xi,t} on f, raising the
// truncation order until the answer is certified (candidate <= order).
inline ValueResult quasimonomial_value(const PlaneSeries& xi, const QuadNum& t, const Poly2<Rat>& f) {
  if (f.zero()) fail(Errc::ZeroPolynomial, "valuation of 0");
  if (t < QuadNum(1)) fail(Errc::InvalidParameter, "quasimonomial parameter needs t >= 1");
  int order = std::max<long long>(16, 4 * f.total_degree());
  while (true) {
    auto pts = detail::expanded_support(xi, f, order);
    bool first = true;
    QuadNum best;
    for (const auto& [i, j] : pts) {
      QuadNum val = QuadNum(Rat(i)) + t * QuadNum(Rat(j));
      if (first || val < best) {
        best = val;
        first = false;
      }
    }
    if (!first && best <= QuadNum(Rat(order))) return ValueResult{best, order};
    order *= 2;
    if (order > kMaxTruncationOrder)
      fail(Errc::TruncationCap,
           "value did not stabilize below order " + std::to_string(kMaxTruncationOrder));
  }
}

// Open interval of t where (value function) > sqrt(t) * deg, solved piece by
// piece as a quadratic in u = sqrt(t); exact quadratic endpoints.
struct SubmaxInterval {
  bool empty = true;
  QuadNum lo;
  QuadNum hi;
};

inline SubmaxInterval submaximal_interval_from_pieces(const PiecewiseLinearFn& fn, long long deg) {
  if (deg <= 0) fail(Errc::InvalidArgs, "degree must be positive");
  struct Seg {
    QuadNum lo, hi;
  };
  std::vector<Seg> segs;
  Rat d(deg);
  for (const auto& piece : fn.pieces) {
    const Rat& a = piece.slope;
    const Rat& b = piece.intercept;
    if (a == 0) {
      if (b <= 0) continue;
      QuadNum cut((b / d) * (b / d));  // solution t < (b/d)^2
      QuadNum hi = cut;
      if (!piece.unbounded && qn_cross_cmp(piece.hi, hi) < 0) hi = piece.hi;
      if (qn_cross_cmp(hi, piece.lo) > 0) segs.push_back({piece.lo, hi});
      continue;
    }
    if (a < 0) fail(Errc::InvalidArgs, "value function must be non-decreasing");
    // a u^2 - d u + b > 0 in u = sqrt(t)
    Rat disc = d * d - 4 * a * b;
    if (disc <= 0) {
      // positive away from at most one touch point
      if (piece.unbounded) fail(Errc::InvalidArgs, "unbounded submaximal set; not a polynomial datum");
      segs.push_back({piece.lo, piece.hi});
      continue;
    }
    QuadNum root = *qn_sqrt(QuadNum(disc));
    QuadNum uminus = (QuadNum(d) - root) * QuadNum(Rat(1) / (2 * a));
    QuadNum uplus = (QuadNum(d) + root) * QuadNum(Rat(1) / (2 * a));
    QuadNum tminus = uminus * uminus;
    QuadNum tplus = uplus * uplus;
    // left part [lo, min(hi, tminus))
    {
      QuadNum hi = tminus;
      if (!piece.unbounded && qn_cross_cmp(piece.hi, hi) < 0) hi = piece.hi;
      if (qn_cross_cmp(hi, piece.lo) > 0) segs.push_back({piece.lo, hi});
    }
    // right part (max(lo, tplus), hi]
    if (piece.unbounded) {
      // the solution set would reach t = infinity
      fail(Errc::InvalidArgs, "unbounded submaximal set; not a polynomial datum");
    } else {
      QuadNum lo = tplus;
      if (qn_cross_cmp(lo, piece.lo) < 0) lo = piece.lo;
      if (qn_cross_cmp(piece.hi, lo) > 0) segs.push_back({lo, piece.hi});
    }
  }
  if (segs.empty()) return SubmaxInterval{};
  // merge touching or overlapping segments (single-point gaps close up:
  // an interior equality point belongs to the closed computing interval)
  std::sort(segs.begin(), segs.end(),
            [](const Seg& x, const Seg& y) { return qn_cross_cmp(x.lo, y.lo) < 0; });
  Seg curr = segs.front();
  std::vector<Seg> merged;
  for (size_t i = 1; i < segs.size(); ++i) {
    if (qn_cross_cmp(segs[i].lo, curr.hi) <= 0) {
      if (qn_cross_cmp(segs[i].hi, curr.hi) > 0) curr.hi = segs[i].hi;
    } else {
      merged.push_back(curr);
      curr = segs[i];
    }
  }
  merged.push_back(curr);
  if (merged.size() > 1)
    fail(Errc::InvalidArgs, "submaximal locus is disconnected; is the input irreducible?");
  return SubmaxInterval{false, merged.front().lo, merged.front().hi};
}

// Squarefree/content sanity check only; full irreducibility is the caller's
// responsibility.
inline SubmaxInterval submaximal_interval(const PlaneSeries& xi, const Poly2<Rat>& f) {
  if (f.zero()) fail(Errc::ZeroPolynomial, "submaximal interval of 0");
  return submaximal_interval_from_pieces(legendre(newton_polygon(xi, f)), f.total_degree());
}

}  // namespace planeval
