#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "planeval/quadnum.hpp"

namespace planeval {

// A class (d; m_1, ..., m_n) in the Picard lattice of the plane blown up at
// n points, written in the ordered basis (L, -E_1, ..., -E_n). The tuple in
// the shorthand notation is stored verbatim: d is the degree, m_i the
// multiplicities. n is part of the value; operations verify agreement.
struct DivisorClass {
  QuadNum d;
  std::vector<QuadNum> m;

  int n() const { return static_cast<int>(m.size()); }

  bool operator==(const DivisorClass& o) const { return d == o.d && m == o.m; }

  bool is_integral() const {
    auto ok = [](const QuadNum& q) { return q.is_rational() && rat_is_integer(q.a()); };
    if (!ok(d)) return false;
    for (const auto& mi : m)
      if (!ok(mi)) return false;
    return true;
  }
};

inline DivisorClass line_class(int n) { return DivisorClass{QuadNum(1), std::vector<QuadNum>(n, QuadNum(0))}; }

// Class of the exceptional divisor E_i (1-based): (0; 0,...,-1,...,0).
inline DivisorClass exceptional_class(int n, int i) {
  if (i < 1 || i > n) fail(Errc::IndexOutOfRange, "exceptional index " + std::to_string(i));
  DivisorClass c{QuadNum(0), std::vector<QuadNum>(n, QuadNum(0))};
  c.m[i - 1] = QuadNum(-1);
  return c;
}

inline DivisorClass canonical_class(int n) {
  return DivisorClass{QuadNum(-3), std::vector<QuadNum>(n, QuadNum(-1))};
}

// Intersection pairing d d' - sum m_i m'_i.
inline QuadNum pair(const DivisorClass& a, const DivisorClass& b) {
  if (a.n() != b.n())
    fail(Errc::DimensionMismatch,
         "classes on " + std::to_string(a.n()) + " and " + std::to_string(b.n()) + " points");
  QuadNum acc = a.d * b.d;
  for (int i = 0; i < a.n(); ++i) acc -= a.m[i] * b.m[i];
  return acc;
}

inline QuadNum self_pairing(const DivisorClass& c) { return pair(c, c); }

// (C^2 + K C)/2 + 1.
inline QuadNum arithmetic_genus(const DivisorClass& c) {
  QuadNum v = pair(c, c) + pair(canonical_class(c.n()), c);
  return v * QuadNum(Rat(1, 2)) + QuadNum(1);
}

// Grammar: "d;m1,m2,..." where each token is a rational or quadratic number
// and "m^k" abbreviates k-fold repetition.
inline DivisorClass parse_class(std::string_view s) {
  auto split_token = [&](std::string_view tok, size_t base) -> std::pair<QuadNum, long> {
    // token may carry an exponent suffix "^k"; '^' cannot occur inside numbers
    long rep = 1;
    size_t caret = tok.rfind('^');
    if (caret != std::string_view::npos && tok.find(')', caret) == std::string_view::npos) {
      std::string_view e = tok.substr(caret + 1);
      if (e.empty()) fail(Errc::SyntaxError, "empty exponent at position " + std::to_string(base + caret + 1));
      rep = 0;
      for (char ch : e) {
        if (!std::isdigit(static_cast<unsigned char>(ch)))
          fail(Errc::SyntaxError, "bad exponent at position " + std::to_string(base + caret + 1));
        rep = rep * 10 + (ch - '0');
      }
      if (rep < 1) fail(Errc::SyntaxError, "exponent must be positive at position " + std::to_string(base + caret + 1));
      tok = tok.substr(0, caret);
    }
    return {parse_quad(tok), rep};
  };

  size_t semi = s.find(';');
  if (semi == std::string_view::npos) fail(Errc::SyntaxError, "expected ';' in class '" + std::string(s) + "'");
  DivisorClass c;
  c.d = parse_quad(s.substr(0, semi));
  size_t pos = semi + 1;
  if (pos == s.size()) return c;  // "d;" with zero points
  while (true) {
    size_t comma = s.find(',', pos);
    std::string_view tok = comma == std::string_view::npos ? s.substr(pos) : s.substr(pos, comma - pos);
    if (tok.empty()) fail(Errc::SyntaxError, "empty multiplicity at position " + std::to_string(pos));
    auto [val, rep] = split_token(tok, pos);
    for (long i = 0; i < rep; ++i) c.m.push_back(val);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return c;
}

inline std::string render_class(const DivisorClass& c) {
  std::string out = c.d.to_string() + ";";
  for (int i = 0; i < c.n();) {
    int j = i;
    while (j < c.n() && c.m[j] == c.m[i]) ++j;
    if (i > 0) out += ",";
    out += c.m[i].to_string();
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

}  // namespace planeval
