#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "planeval/error.hpp"

namespace planeval {

// Exact arithmetic scalars. Rationals are kept reduced with positive
// denominator by the backend; all logic in this library is exact, decimal
// strings are rendered only for display.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return numerator(r); }
inline Int rat_den(const Rat& r) { return denominator(r); }

inline bool rat_is_integer(const Rat& r) { return denominator(r) == 1; }

inline Int rat_floor(const Rat& r) {
  Int q = numerator(r) / denominator(r);
  if (numerator(r) < 0 && q * denominator(r) != numerator(r)) --q;
  return q;
}

inline Int rat_ceil(const Rat& r) { return -rat_floor(-r); }

inline int sign_of(const Rat& r) { return r.sign(); }
inline int sign_of(const Int& i) { return i.sign(); }

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

// floor(sqrt(n)) for n >= 0.
inline Int isqrt_floor(const Int& n) {
  if (n < 0) fail(Errc::NegativeRadicand, "isqrt of negative integer");
  return sqrt(n);
}

inline std::optional<Int> exact_int_sqrt(const Int& n) {
  if (n < 0) return std::nullopt;
  Int r = sqrt(n);
  if (r * r == n) return r;
  return std::nullopt;
}

// Exact rational square root, if one exists.
inline std::optional<Rat> exact_rat_sqrt(const Rat& r) {
  if (r < 0) return std::nullopt;
  auto sn = exact_int_sqrt(numerator(r));
  if (!sn) return std::nullopt;
  auto sd = exact_int_sqrt(denominator(r));
  if (!sd) return std::nullopt;
  return Rat(*sn, *sd);
}

// Decompose n = s^2 * r with r squarefree; returns (s, r). Requires n >= 0.
inline std::pair<Int, Int> squarefree_decompose(Int n) {
  if (n < 0) fail(Errc::NegativeRadicand, "squarefree part of negative integer");
  if (n == 0) return {Int(0), Int(0)};
  Int s = 1, r = 1;
  for (Int p = 2; p * p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) s *= p;
    if (e % 2) r *= p;
  }
  // Remaining n has at most two prime factors, both > cbrt of the original.
  if (auto sq = exact_int_sqrt(n)) {
    s *= *sq;
  } else {
    r *= n;
  }
  return {s, r};
}

inline std::string rat_str(const Rat& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

// Parses "p" or "p/q" with optional sign; pos reports where scanning stopped.
inline Rat parse_rat(std::string_view s, size_t* pos = nullptr) {
  size_t i = 0;
  auto syntax = [&](const std::string& what) {
    fail(Errc::SyntaxError, what + " at position " + std::to_string(i) + " in '" + std::string(s) + "'");
  };
  bool neg = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
    neg = s[i] == '-';
    ++i;
  }
  if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) syntax("expected digit");
  Int num = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
    num = num * 10 + (s[i] - '0');
    ++i;
  }
  Int den = 1;
  if (i < s.size() && s[i] == '/') {
    ++i;
    if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) syntax("expected digit after '/'");
    den = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      den = den * 10 + (s[i] - '0');
      ++i;
    }
    if (den == 0) syntax("zero denominator");
  }
  if (pos) {
    *pos = i;
  } else if (i != s.size()) {
    syntax("trailing characters");
  }
  Rat r(num, den);
  return neg ? Rat(-r) : r;
}

// Truncated decimal rendering of num/den, display only.
inline std::string decimal_str(const Rat& r, int digits) {
  bool neg = r < 0;
  Rat a = rat_abs(r);
  Int scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  Int units = numerator(a) * scale / denominator(a);
  Int ip = units / scale;
  Int fp = units % scale;
  std::string out = (neg && units != 0 ? "-" : "") + ip.str();
  if (digits > 0) {
    std::string f = fp.str();
    out += "." + std::string(digits - f.size(), '0') + f;
  }
  return out;
}

}  // namespace planeval
