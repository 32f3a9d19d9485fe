#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "planeval/pwl.hpp"
#include "planeval/valuation.hpp"

namespace planeval {

// Fibonacci numbers with the seeds F_{-1} = 1, F_0 = 0.
inline Rat fibonacci(int i) {
  if (i < -1) fail(Errc::InvalidParameter, "fibonacci index >= -1 required");
  Int prev = 1, cur = 0;  // F_{-1}, F_0
  if (i == -1) return Rat(prev);
  for (int n = 0; n < i; ++n) {
    Int next = prev + cur;
    prev = cur;
    cur = next;
  }
  return Rat(cur);
}

enum class MuRowTag { Fibonacci, Special, Square };

// One interval of the partial piecewise linear function known to agree with
// the Waldschmidt-reciprocal function: value(t) = slope * t + intercept on
// [lo, hi]. sqrt-contact endpoints satisfy value(e)^2 = e exactly.
struct MuRow {
  QuadNum lo, hi;
  Rat slope, intercept;
  MuRowTag tag;
  std::string label;
  int index = 0;  // Fibonacci i or square n
  bool contact_lo = false, contact_hi = false;

  QuadNum value_at(const QuadNum& t) const { return QuadNum(slope) * t + QuadNum(intercept); }
};

struct MuTable {
  std::vector<MuRow> rows;
};

namespace detail {

inline MuRow make_row(QuadNum lo, QuadNum hi, Rat slope, Rat intercept, MuRowTag tag, std::string label,
                      int index, bool clo, bool chi) {
  return MuRow{std::move(lo), std::move(hi), std::move(slope), std::move(intercept), tag,
               std::move(label), index, clo, chi};
}

// (a + b sqrt(k))^2 as a QuadNum
inline QuadNum quad_sq(const Rat& a, const Rat& b, long long k) {
  QuadNum q(a, b, Int(k));
  return q * q;
}

}  // namespace detail

// The table of known exact values: Fibonacci pairs for odd i, the two bridge
// rows ending at (8/3)^2, the eight special pairs between 7+1/9 and (17/6)^2,
// and the square rule value(n^2) = n. Generated, not hard-coded.
inline MuTable build_mu_table(int max_fib_index = 21, int square_max = 20) {
  if (max_fib_index < 1 || max_fib_index % 2 == 0)
    fail(Errc::InvalidParameter, "max_fib_index must be an odd integer >= 1");
  MuTable table;
  auto add = [&](MuRow r) { table.rows.push_back(std::move(r)); };

  for (int i = 1; i <= max_fib_index; i += 2) {
    Rat fm = fibonacci(i - 2), f = fibonacci(i), fp = fibonacci(i + 2);
    // rising piece (F_{i-2}/F_i) t on [F_i^2/F_{i-2}^2, F_{i+2}/F_{i-2}]
    add(detail::make_row(QuadNum(f * f / (fm * fm)), QuadNum(fp / fm), fm / f, Rat(0), MuRowTag::Fibonacci,
                         "fib-" + std::to_string(i) + "-rise", i, true, false));
    // constant piece F_{i+2}/F_i on [F_{i+2}/F_{i-2}, F_{i+2}^2/F_i^2]
    add(detail::make_row(QuadNum(fp / fm), QuadNum(fp * fp / (f * f)), Rat(0), fp / f, MuRowTag::Fibonacci,
                         "fib-" + std::to_string(i) + "-const", i, false, true));
  }

  // bridge: (1 + t)/3 on [phi^4, 7], then 8/3 on [7, 64/9]; phi^4 = (7+3 sqrt 5)/2
  QuadNum phi4(Rat(7, 2), Rat(3, 2), Int(5));
  add(detail::make_row(phi4, QuadNum(7), Rat(1, 3), Rat(1, 3), MuRowTag::Special, "bridge-rise", 0, true, false));
  add(detail::make_row(QuadNum(7), QuadNum(Rat(64, 9)), Rat(0), Rat(8, 3), MuRowTag::Special, "bridge-const", 0,
                       false, true));

  // the eight special pairs: each is a rising piece up to its center and a
  // second piece down to a sqrt-contact endpoint
  struct SpecialPair {
    const char* label;
    QuadNum lo;      // sqrt-contact
    Rat mid;
    QuadNum hi;      // sqrt-contact
    Rat s1, c1;      // left piece slope/intercept
    Rat s2, c2;      // right piece slope/intercept
  };
  using detail::quad_sq;
  const SpecialPair specials[] = {
      {"7+1/8", quad_sq(Rat(24, 17), Rat(1, 17), 457), Rat(57, 8), quad_sq(Rat(24), Rat(-1), 455),
       Rat(17, 48), Rat(7, 48), Rat(1, 48), Rat(121, 48)},
      {"7+2/15", quad_sq(Rat(16, 11), Rat(1, 11), 179), Rat(107, 15), quad_sq(Rat(32, 7), Rat(-1, 7), 177),
       Rat(11, 32), Rat(7, 32), Rat(7, 64), Rat(121, 64)},
      {"7+1/7", quad_sq(Rat(6, 4), Rat(1, 4), 22), Rat(50, 7), quad_sq(Rat(12), Rat(-1), 87),
       Rat(8, 24), Rat(7, 24), Rat(1, 24), Rat(57, 24)},
      {"7+2/13", quad_sq(Rat(20, 13), Rat(1, 13), 218), Rat(93, 13), QuadNum(Rat(107 * 107, 40 * 40)),
       Rat(13, 40), Rat(14, 40), Rat(0), Rat(107, 40)},
      {"7+1/5", quad_sq(Rat(8, 5), Rat(1, 5), 29), Rat(36, 5), QuadNum(Rat(43 * 43, 16 * 16)),
       Rat(5, 16), Rat(7, 16), Rat(0), Rat(43, 16)},
      {"7+1/4", QuadNum(Rat(35 * 35, 13 * 13)), Rat(29, 4), quad_sq(Rat(35, 2), Rat(-1, 2), 877),
       Rat(13, 35), Rat(0), Rat(1, 35), Rat(87, 35)},
      {"7+1/2", quad_sq(Rat(4, 2), Rat(1, 2), 2), Rat(15, 2), QuadNum(Rat(121, 16)),
       Rat(2, 8), Rat(7, 8), Rat(0), Rat(11, 4)},
      {"8", quad_sq(Rat(3, 2), Rat(1, 2), 7), Rat(8), QuadNum(Rat(17 * 17, 6 * 6)),
       Rat(2, 6), Rat(1, 6), Rat(0), Rat(17, 6)},
  };
  for (const auto& sp : specials) {
    add(detail::make_row(sp.lo, QuadNum(sp.mid), sp.s1, sp.c1, MuRowTag::Special,
                         std::string(sp.label) + "-rise", 0, true, false));
    add(detail::make_row(QuadNum(sp.mid), sp.hi, sp.s2, sp.c2, MuRowTag::Special,
                         std::string(sp.label) + "-tail", 0, false, true));
  }

  for (int n = 1; n <= square_max; ++n)
    add(detail::make_row(QuadNum(Rat(Int(n) * n)), QuadNum(Rat(Int(n) * n)), Rat(0), Rat(n), MuRowTag::Square,
                         "square-" + std::to_string(n), n, true, true));

  std::sort(table.rows.begin(), table.rows.end(), [](const MuRow& x, const MuRow& y) {
    int c = qn_cross_cmp(x.lo, y.lo);
    if (c != 0) return c < 0;
    return qn_cross_cmp(x.hi, y.hi) < 0;
  });
  return table;
}

struct MuValue {
  QuadNum value;
  const MuRow* row;
};

// Exact evaluation; nullopt where the function is not known (the table is a
// partial function and is never extrapolated).
inline std::optional<MuValue> mu_eval(const MuTable& table, const QuadNum& t) {
  if (qn_cross_cmp(t, QuadNum(1)) < 0) fail(Errc::InvalidParameter, "mu is defined for t >= 1");
  for (const auto& row : table.rows)
    if (qn_cross_cmp(row.lo, t) <= 0 && qn_cross_cmp(t, row.hi) <= 0) return MuValue{row.value_at(t), &row};
  return std::nullopt;
}

// value(t)^2 - t; zero exactly at parameters where the valuation is maximal.
inline std::optional<QuadNum> maximality_residual(const MuTable& table, const QuadNum& t) {
  auto v = mu_eval(table, t);
  if (!v) return std::nullopt;
  return v->value * v->value - t;
}

// Lower bound sqrt(t) from the volume estimate, exact whenever representable
// in the field of t.
inline std::optional<QuadNum> sqrt_lower_bound(const QuadNum& t) { return qn_sqrt(t); }

// Curve datum of the i-th cuspidal rational curve (odd i): degree F_i with
// single-segment Newton polygon (0, F_{i-2}) -- (F_{i+2}, 0).
struct CurveDatum {
  long long degree;
  NewtonPolygon polygon;
};

inline CurveDatum orevkov_datum(int i) {
  if (i < 1 || i % 2 == 0) fail(Errc::InvalidParameter, "odd index >= 1 required");
  Rat fm = fibonacci(i - 2), f = fibonacci(i), fp = fibonacci(i + 2);
  CurveDatum d;
  d.degree = numerator(f).convert_to<long long>();
  d.polygon.vertices = {{0, numerator(fm).convert_to<long long>()}, {numerator(fp).convert_to<long long>(), 0}};
  return d;
}

// Lower bound value(f)/deg f for the table function, from any curve.
inline QuadNum mu_lower_bound_from_curve(const PlaneSeries& xi, const Poly2<Rat>& f, const QuadNum& t) {
  ValueResult v = quasimonomial_value(xi, t, f);
  return v.value * QuadNum(Rat(1, f.total_degree()));
}

inline QuadNum mu_lower_bound_from_polygon(const NewtonPolygon& np, long long degree, const QuadNum& t) {
  return legendre(np).eval(t) * QuadNum(Rat(1, degree));
}

// sqrt(n) <= alpha_hat <= sqrt(n) sqrt(1 + 2/(n^2 - 5 n sqrt(n) - 2)) for
// general points; returns the lower bound and the exact square of the upper
// bound, both in Q(sqrt(n)). The correction term is positive only once
// n^2 - 5 n sqrt(n) - 2 > 0 (n >= 26).
inline std::pair<QuadNum, QuadNum> hr09_bound(long long n) {
  if (n < 10) fail(Errc::InvalidParameter, "bound stated for n >= 10");
  QuadNum sqrt_n = *qn_sqrt(QuadNum(Rat(n)));
  QuadNum denom = QuadNum(Rat(Int(n) * n - 2)) - QuadNum(Rat(5 * Int(n))) * sqrt_n;
  if (denom.sign() <= 0)
    fail(Errc::InvalidParameter,
         "n^2 - 5 n sqrt(n) - 2 <= 0 for n = " + std::to_string(n) + "; the upper bound is vacuous");
  QuadNum upper_sq = QuadNum(Rat(n)) * (QuadNum(1) + QuadNum(2) * denom.inv());
  return {sqrt_n, upper_sq};
}

// alpha_hat = mu_hat^{-1} on normalized valuations; also converts to
// Seshadri data.
inline QuadNum alpha_mu_duality(const QuadNum& x) {
  if (x.sign() == 0) fail(Errc::DivisionByZero, "duality at zero");
  return x.inv();
}

}  // namespace planeval
