#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "planeval/rat.hpp"

namespace planeval {

// --- arithmetic mod a 64-bit prime ------------------------------------------

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

inline std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, p);
    a = mulmod_u64(a, a, p);
    e >>= 1;
  }
  return r;
}

inline std::uint64_t invmod_u64(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) fail(Errc::DivisionByZero, "inverse of 0 mod p");
  return powmod_u64(a % p, p - 2, p);
}

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < r; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

// Element of F_p; carries its modulus.
struct Zp {
  std::uint64_t v = 0;
  std::uint64_t p = 0;

  friend Zp operator+(Zp a, Zp b) { return {(a.v + b.v) % a.modulus(b), a.modulus(b)}; }
  friend Zp operator-(Zp a, Zp b) { return {(a.v + a.modulus(b) - b.v) % a.modulus(b), a.modulus(b)}; }
  friend Zp operator*(Zp a, Zp b) { return {mulmod_u64(a.v, b.v, a.modulus(b)), a.modulus(b)}; }
  friend Zp operator-(Zp a) { return {a.v == 0 ? 0 : a.p - a.v, a.p}; }
  friend bool operator==(Zp a, Zp b) { return a.v == b.v; }

  std::uint64_t modulus(Zp other) const {
    if (p == 0) return other.p;
    return p;
  }
};

inline bool is_zero(const Zp& z) { return z.v == 0; }
inline bool is_zero(const Rat& r) { return r == 0; }

inline Zp rat_to_zp(const Rat& r, std::uint64_t p) {
  Int n = numerator(r) % p, d = denominator(r) % p;
  if (n < 0) n += p;
  std::uint64_t nu = n.convert_to<std::uint64_t>();
  std::uint64_t du = d.convert_to<std::uint64_t>();
  if (du == 0) fail(Errc::DivisionByZero, "denominator divisible by p");
  return Zp{mulmod_u64(nu, invmod_u64(du, p), p), p};
}

// --- sparse multivariate polynomials over Q ----------------------------------
//
// Coefficient ring for the symbolic series mode: polynomials in the series
// coefficients a_1, a_2, ... A support monomial counts as present iff its
// coefficient polynomial is not identically zero, certifying the value for
// every sufficiently general specialization.
struct MultiPoly {
  std::map<std::vector<int>, Rat> terms;  // exponent vector of (a_1, a_2, ...) -> coeff

  static MultiPoly constant(const Rat& c) {
    MultiPoly m;
    if (c != 0) m.terms[{}] = c;
    return m;
  }

  static MultiPoly var(int i) {
    MultiPoly m;
    std::vector<int> e(i, 0);
    e[i - 1] = 1;
    m.terms[std::move(e)] = 1;
    return m;
  }

  friend MultiPoly operator+(const MultiPoly& x, const MultiPoly& y) {
    MultiPoly r = x;
    for (const auto& [e, c] : y.terms) {
      Rat& slot = r.terms[e];
      slot += c;
      if (slot == 0) r.terms.erase(e);
    }
    return r;
  }

  friend MultiPoly operator-(const MultiPoly& x) {
    MultiPoly r = x;
    for (auto& [e, c] : r.terms) c = -c;
    return r;
  }

  friend MultiPoly operator-(const MultiPoly& x, const MultiPoly& y) { return x + (-y); }

  friend MultiPoly operator*(const MultiPoly& x, const MultiPoly& y) {
    MultiPoly r;
    for (const auto& [e1, c1] : x.terms)
      for (const auto& [e2, c2] : y.terms) {
        std::vector<int> e(std::max(e1.size(), e2.size()), 0);
        for (size_t i = 0; i < e1.size(); ++i) e[i] += e1[i];
        for (size_t i = 0; i < e2.size(); ++i) e[i] += e2[i];
        while (!e.empty() && e.back() == 0) e.pop_back();
        auto it = r.terms.try_emplace(std::move(e), Rat(0)).first;
        it->second += c1 * c2;
        if (it->second == 0) r.terms.erase(it);
      }
    return r;
  }

  friend bool operator==(const MultiPoly& x, const MultiPoly& y) { return x.terms == y.terms; }
};

inline bool is_zero(const MultiPoly& m) { return m.terms.empty(); }

// --- sparse bivariate polynomials --------------------------------------------

template <class R>
struct Poly2 {
  using Key = std::pair<long long, long long>;  // exponents of the two variables
  std::map<Key, R> terms;

  bool zero() const { return terms.empty(); }

  void add_term(long long i, long long j, const R& c) {
    if (is_zero(c)) return;
    auto it = terms.find({i, j});
    if (it == terms.end()) {
      terms.emplace(Key{i, j}, c);
    } else {
      it->second = it->second + c;
      if (is_zero(it->second)) terms.erase(it);
    }
  }

  long long total_degree() const {
    long long d = 0;
    for (const auto& [k, c] : terms) d = std::max(d, k.first + k.second);
    return d;
  }

  long long degree_second() const {
    long long d = 0;
    for (const auto& [k, c] : terms) d = std::max(d, k.second);
    return d;
  }

  friend Poly2 operator+(const Poly2& f, const Poly2& g) {
    Poly2 r = f;
    for (const auto& [k, c] : g.terms) r.add_term(k.first, k.second, c);
    return r;
  }

  friend Poly2 operator*(const Poly2& f, const Poly2& g) {
    Poly2 r;
    for (const auto& [k1, c1] : f.terms)
      for (const auto& [k2, c2] : g.terms) r.add_term(k1.first + k2.first, k1.second + k2.second, c1 * c2);
    return r;
  }
};

template <class A, class F>
auto map_coeffs(const Poly2<A>& f, F&& fn) {
  Poly2<std::decay_t<decltype(fn(std::declval<A>()))>> r;
  for (const auto& [k, c] : f.terms) r.add_term(k.first, k.second, fn(c));
  return r;
}

template <class R>
R unit_coeff(const Poly2<R>& f, const Poly2<R>& s);

// Substitute second variable: f(x, y) -> f(x, w + s(x)), where s is a
// polynomial in the first variable only. Result lives in variables (x, w).
template <class R>
Poly2<R> substitute_shift(const Poly2<R>& f, const Poly2<R>& s) {
  long long dy = f.degree_second();
  // rows[j] = coefficient of y^j as a polynomial in x
  std::vector<Poly2<R>> rows(dy + 1);
  for (const auto& [k, c] : f.terms) rows[k.second].add_term(k.first, 0, c);
  R one = unit_coeff(f, s);
  Poly2<R> w_plus_s = s;
  w_plus_s.add_term(0, 1, one);
  Poly2<R> power;  // (w + s)^0 = 1
  power.add_term(0, 0, one);
  Poly2<R> out;
  for (long long j = 0; j <= dy; ++j) {
    if (j > 0) power = power * w_plus_s;
    out = out + rows[j] * power;
  }
  return out;
}

template <>
inline Rat unit_coeff<Rat>(const Poly2<Rat>&, const Poly2<Rat>&) { return Rat(1); }

template <>
inline MultiPoly unit_coeff<MultiPoly>(const Poly2<MultiPoly>&, const Poly2<MultiPoly>&) {
  return MultiPoly::constant(1);
}

template <>
inline Zp unit_coeff<Zp>(const Poly2<Zp>& f, const Poly2<Zp>& s) {
  if (!f.terms.empty()) return Zp{1, f.terms.begin()->second.p};
  if (!s.terms.empty()) return Zp{1, s.terms.begin()->second.p};
  fail(Errc::ZeroPolynomial, "cannot infer modulus");
}

// Parses sums of monomial terms in variables x and y, e.g. "y^2-x^3",
// "3/2*x*y - y + 1". No parentheses.
inline Poly2<Rat> parse_poly2(std::string_view s) {
  Poly2<Rat> f;
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  auto syntax = [&](const std::string& what) {
    fail(Errc::SyntaxError, what + " at position " + std::to_string(i) + " in '" + std::string(s) + "'");
  };
  skip_ws();
  if (i == s.size()) syntax("empty polynomial");
  while (i < s.size()) {
    skip_ws();
    Rat sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
      skip_ws();
    }
    Rat coeff = 1;
    long long ex = 0, ey = 0;
    bool saw_factor = false;
    while (true) {
      skip_ws();
      if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        size_t used = 0;
        coeff *= parse_rat(s.substr(i), &used);
        i += used;
        saw_factor = true;
      } else if (i < s.size() && (s[i] == 'x' || s[i] == 'y')) {
        char var = s[i];
        ++i;
        long long e = 1;
        if (i < s.size() && s[i] == '^') {
          ++i;
          if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) syntax("expected exponent");
          e = 0;
          while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) e = e * 10 + (s[i++] - '0');
        }
        (var == 'x' ? ex : ey) += e;
        saw_factor = true;
      } else {
        break;
      }
      skip_ws();
      if (i < s.size() && s[i] == '*') {
        ++i;
        continue;
      }
      if (i < s.size() && (s[i] == 'x' || s[i] == 'y' || std::isdigit(static_cast<unsigned char>(s[i]))))
        continue;  // implicit product like "2x" or "x y"
      break;
    }
    if (!saw_factor) syntax("expected term");
    f.add_term(ex, ey, sign * coeff);
    skip_ws();
    if (i < s.size() && s[i] != '+' && s[i] != '-') syntax("expected '+' or '-'");
  }
  return f;
}

}  // namespace planeval
