#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "planeval/lattice.hpp"

namespace planeval {

// One arithmetic Cremona transformation based at p_i, p_j, p_k:
//   d' = 2d - m_i - m_j - m_k,  m_i' = d - m_j - m_k (etc.), rest unchanged.
// c = d - m_i - m_j - m_k is the degree increment; the step is an involution.
struct CremonaStep {
  int i, j, k;  // 1-based base indices
  DivisorClass input;
  DivisorClass output;
  QuadNum c;
};

inline void check_base_indices(int n, int i, int j, int k) {
  for (int idx : {i, j, k})
    if (idx < 1 || idx > n)
      fail(Errc::IndexOutOfRange, "base index " + std::to_string(idx) + " outside 1.." + std::to_string(n));
  if (i == j || i == k || j == k)
    fail(Errc::RepeatedIndex, "base indices must be distinct, got (" + std::to_string(i) + "," +
                                  std::to_string(j) + "," + std::to_string(k) + ")");
}

inline DivisorClass cremona_transform(const DivisorClass& cls, int i, int j, int k) {
  check_base_indices(cls.n(), i, j, k);
  const QuadNum &mi = cls.m[i - 1], &mj = cls.m[j - 1], &mk = cls.m[k - 1];
  QuadNum c = cls.d - mi - mj - mk;
  DivisorClass out = cls;
  out.d = cls.d + c;
  out.m[i - 1] = cls.d - mj - mk;
  out.m[j - 1] = cls.d - mi - mk;
  out.m[k - 1] = cls.d - mi - mj;
  return out;
}

inline CremonaStep cremona_step(const DivisorClass& cls, int i, int j, int k) {
  DivisorClass out = cremona_transform(cls, i, j, k);
  QuadNum c = cls.d - cls.m[i - 1] - cls.m[j - 1] - cls.m[k - 1];
  return CremonaStep{i, j, k, cls, out, c};
}

enum class HudsonVerdict { MinusOneClass, Rejected };

struct HudsonTrace {
  std::vector<CremonaStep> steps;
  HudsonVerdict verdict;
  std::string reason;  // set when rejected
  DivisorClass terminal;
};

namespace detail {

// Integer class as a plain vector (d, m_1, ..., m_n); fast path for the
// breadth-first enumeration and Hudson iteration.
using IntClass = std::vector<long long>;

inline bool int_is_terminal(const IntClass& v) {
  if (v[0] != 0) return false;
  int minus = 0;
  for (size_t i = 1; i < v.size(); ++i) {
    if (v[i] == -1)
      ++minus;
    else if (v[i] != 0)
      return false;
  }
  return minus == 1;
}

inline IntClass int_transform(const IntClass& v, int i, int j, int k) {
  IntClass out = v;
  long long d = v[0], mi = v[i], mj = v[j], mk = v[k];
  out[0] = 2 * d - mi - mj - mk;
  out[i] = d - mj - mk;
  out[j] = d - mi - mk;
  out[k] = d - mi - mj;
  return out;
}

inline IntClass to_int_class(const DivisorClass& c) {
  IntClass v;
  v.reserve(c.n() + 1);
  auto push = [&](const QuadNum& q) {
    v.push_back(static_cast<long long>(numerator(q.a())));
  };
  push(c.d);
  for (const auto& mi : c.m) push(mi);
  return v;
}

inline DivisorClass from_int_class(const IntClass& v) {
  DivisorClass c;
  c.d = QuadNum(Rat(v[0]));
  for (size_t i = 1; i < v.size(); ++i) c.m.push_back(QuadNum(Rat(v[i])));
  return c;
}

}  // namespace detail

// Hudson's test: recursively transform at the three largest multiplicities
// (ties broken by lowest index); a class of an actual (-1)-curve reduces with
// strictly decreasing degree to a permutation of (0; -1, 0^{n-1}).
inline HudsonTrace hudson_test(const DivisorClass& cls) {
  int n = cls.n();
  if (n < 3) fail(Errc::NumericalPrecondition, "hudson test needs n >= 3, got n = " + std::to_string(n));
  if (!cls.is_integral())
    fail(Errc::NumericalPrecondition, "hudson test needs integer entries, got " + render_class(cls));
  if (self_pairing(cls) != QuadNum(-1))
    fail(Errc::NumericalPrecondition,
         "self-intersection is " + self_pairing(cls).to_string() + ", need -1");
  if (pair(canonical_class(n), cls) != QuadNum(-1))
    fail(Errc::NumericalPrecondition,
         "canonical degree is " + pair(canonical_class(n), cls).to_string() + ", need -1");

  detail::IntClass v = detail::to_int_class(cls);
  HudsonTrace trace;
  if (detail::int_is_terminal(v)) {
    trace.verdict = HudsonVerdict::MinusOneClass;
    trace.terminal = cls;
    return trace;
  }
  if (v[0] < 0) fail(Errc::NumericalPrecondition, "degree must be nonnegative");
  for (size_t i = 1; i < v.size(); ++i)
    if (v[i] < 0) fail(Errc::NumericalPrecondition, "multiplicities must be nonnegative");

  while (true) {
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 1);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return v[a] > v[b]; });
    int i = idx[0], j = idx[1], k = idx[2];
    long long c = v[0] - v[i] - v[j] - v[k];
    if (c >= 0) {
      trace.verdict = HudsonVerdict::Rejected;
      trace.reason = "degree does not decrease at base (" + std::to_string(i) + "," + std::to_string(j) +
                     "," + std::to_string(k) + ")";
      trace.terminal = detail::from_int_class(v);
      return trace;
    }
    detail::IntClass next = detail::int_transform(v, i, j, k);
    trace.steps.push_back(
        cremona_step(detail::from_int_class(v), i, j, k));
    v = next;
    if (detail::int_is_terminal(v)) {
      trace.verdict = HudsonVerdict::MinusOneClass;
      trace.terminal = detail::from_int_class(v);
      return trace;
    }
    if (v[0] < 0) {
      trace.verdict = HudsonVerdict::Rejected;
      trace.reason = "degree became negative";
      trace.terminal = detail::from_int_class(v);
      return trace;
    }
  }
}

// All labeled (-1)-classes on X_n for 2 <= n <= 8, as the breadth-first
// closure of the exceptional classes under arithmetic Cremona transformations.
// The set is infinite for n >= 9. For n = 2 no base triple exists; the
// closure is taken on X_3 and restricted to classes with m_3 = 0.
inline std::vector<DivisorClass> enumerate_minus_one(int n) {
  if (n < 2 || n > 8)
    fail(Errc::UnsupportedN, "(-1)-classes are enumerable only for 2 <= n <= 8, got n = " + std::to_string(n));
  int work_n = std::max(n, 3);
  std::set<detail::IntClass> seen;
  std::vector<detail::IntClass> frontier;
  for (int i = 1; i <= work_n; ++i) {
    detail::IntClass e(work_n + 1, 0);
    e[i] = -1;
    seen.insert(e);
    frontier.push_back(e);
  }
  std::vector<std::array<int, 3>> triples;
  for (int i = 1; i <= work_n; ++i)
    for (int j = i + 1; j <= work_n; ++j)
      for (int k = j + 1; k <= work_n; ++k) triples.push_back({i, j, k});
  while (!frontier.empty()) {
    std::vector<detail::IntClass> next;
    for (const auto& v : frontier)
      for (const auto& t : triples) {
        detail::IntClass w = detail::int_transform(v, t[0], t[1], t[2]);
        if (seen.insert(w).second) next.push_back(w);
      }
    frontier = std::move(next);
  }
  std::vector<DivisorClass> out;
  for (const auto& v : seen) {
    if (n == 2) {
      if (v[3] != 0) continue;
      out.push_back(detail::from_int_class({v[0], v[1], v[2]}));
    } else {
      out.push_back(detail::from_int_class(v));
    }
  }
  return out;  // std::set order: sorted by (d, m) lexicographically
}

inline long long max_degree(const std::vector<DivisorClass>& classes) {
  long long best = 0;
  for (const auto& c : classes) best = std::max(best, static_cast<long long>(numerator(c.d.a())));
  return best;
}

}  // namespace planeval
