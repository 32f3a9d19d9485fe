#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "planeval/rat.hpp"

namespace planeval {

// A number a + b*sqrt(k) in a fixed real quadratic field Q(sqrt(k)).
// Normal form: k squarefree and >= 2 whenever b != 0; purely rational values
// carry k == 0. Values are immutable; cross-field arithmetic is an error
// rather than a tower extension.
class QuadNum {
 public:
  QuadNum() : a_(0), b_(0), k_(0) {}
  QuadNum(const Rat& a) : a_(a), b_(0), k_(0) {}       // rationals embed implicitly
  QuadNum(int a) : a_(a), b_(0), k_(0) {}              // NOLINT(google-explicit-constructor)
  QuadNum(const Int& a) : a_(Rat(a)), b_(0), k_(0) {}  // NOLINT(google-explicit-constructor)

  QuadNum(const Rat& a, const Rat& b, const Int& k) : a_(a), b_(b), k_(k) { normalize(); }

  static QuadNum sqrt_of(const Int& k) { return QuadNum(Rat(0), Rat(1), k); }

  const Rat& a() const { return a_; }
  const Rat& b() const { return b_; }
  const Int& k() const { return k_; }

  bool is_rational() const { return b_ == 0; }
  const Rat& rational_value() const {
    if (!is_rational()) fail(Errc::NonIntegral, "value " + to_string() + " is irrational");
    return a_;
  }

  QuadNum conj() const { return QuadNum(a_, -b_, k_, raw_tag{}); }

  int sign() const {
    if (b_ == 0) return sign_of(a_);
    if (a_ == 0) return sign_of(b_);
    int sa = sign_of(a_), sb = sign_of(b_);
    if (sa == sb) return sa;
    // Opposite signs: |a| vs |b|*sqrt(k) decides, compare squares.
    int c = cmp_rat(a_ * a_, b_ * b_ * Rat(k_));
    if (c == 0) return 0;  // impossible for squarefree k >= 2, kept for safety
    return c > 0 ? sa : sb;
  }

  friend QuadNum operator-(const QuadNum& x) { return QuadNum(-x.a_, -x.b_, x.k_, raw_tag{}); }

  friend QuadNum operator+(const QuadNum& x, const QuadNum& y) {
    Int k = common_radicand(x, y, "+");
    return QuadNum(x.a_ + y.a_, x.b_ + y.b_, k);
  }

  friend QuadNum operator-(const QuadNum& x, const QuadNum& y) { return x + (-y); }

  friend QuadNum operator*(const QuadNum& x, const QuadNum& y) {
    Int k = common_radicand(x, y, "*");
    return QuadNum(x.a_ * y.a_ + x.b_ * y.b_ * Rat(k), x.a_ * y.b_ + x.b_ * y.a_, k);
  }

  QuadNum inv() const {
    Rat n = a_ * a_ - b_ * b_ * Rat(k_);
    if (n == 0) {
      if (a_ == 0 && b_ == 0) fail(Errc::DivisionByZero, "inverse of zero");
      fail(Errc::DivisionByZero, "zero field norm");  // unreachable for squarefree k
    }
    return QuadNum(a_ / n, -b_ / n, k_, raw_tag{});
  }

  friend QuadNum operator/(const QuadNum& x, const QuadNum& y) { return x * y.inv(); }

  QuadNum& operator+=(const QuadNum& y) { return *this = *this + y; }
  QuadNum& operator-=(const QuadNum& y) { return *this = *this - y; }
  QuadNum& operator*=(const QuadNum& y) { return *this = *this * y; }

  // Exact sign of x - y; requires compatible radicands.
  friend int qn_cmp(const QuadNum& x, const QuadNum& y) { return (x - y).sign(); }

  friend bool operator==(const QuadNum& x, const QuadNum& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.k_ == y.k_;
  }
  friend bool operator!=(const QuadNum& x, const QuadNum& y) { return !(x == y); }
  friend bool operator<(const QuadNum& x, const QuadNum& y) { return qn_cmp(x, y) < 0; }
  friend bool operator>(const QuadNum& x, const QuadNum& y) { return qn_cmp(x, y) > 0; }
  friend bool operator<=(const QuadNum& x, const QuadNum& y) { return qn_cmp(x, y) <= 0; }
  friend bool operator>=(const QuadNum& x, const QuadNum& y) { return qn_cmp(x, y) >= 0; }

  QuadNum square() const { return *this * *this; }

  std::string to_string() const {
    if (b_ == 0) return rat_str(a_);
    std::string root = "sqrt(" + k_.str() + ")";
    std::string bs;
    Rat ab = rat_abs(b_);
    if (ab == 1) {
      bs = root;
    } else {
      bs = rat_str(ab) + "*" + root;
    }
    if (a_ == 0) return (b_ < 0 ? "-" : "") + bs;
    return rat_str(a_) + (b_ < 0 ? "-" : "+") + bs;
  }

  // Truncated decimal rendering; display only, never used in comparisons.
  std::string to_decimal(int digits) const {
    int guard = digits + 8;
    Int scale = 1;
    for (int i = 0; i < guard; ++i) scale *= 10;
    Int total = numerator(a_) * scale / denominator(a_);
    if (b_ != 0) {
      // floor(|b| sqrt(k) 10^guard) = floor(sqrt(b^2 k 10^{2 guard}))
      Rat b2k = b_ * b_ * Rat(k_) * Rat(scale) * Rat(scale);
      Int root = isqrt_floor(numerator(b2k) * denominator(b2k)) / denominator(b2k);
      total += b_ < 0 ? -root : root;
    }
    Int cut = 1;
    for (int i = 0; i < 8; ++i) cut *= 10;
    Int units = total / cut;  // truncate guard digits
    Int show = 1;
    for (int i = 0; i < digits; ++i) show *= 10;
    bool neg = units < 0;
    if (neg) units = -units;
    Int ip = units / show, fp = units % show;
    std::string out = (neg ? "-" : "") + ip.str();
    if (digits > 0) {
      std::string f = fp.str();
      out += "." + std::string(digits - f.size(), '0') + f;
    }
    return out;
  }

 private:
  struct raw_tag {};
  QuadNum(const Rat& a, const Rat& b, const Int& k, raw_tag) : a_(a), b_(b), k_(k) {
    if (b_ == 0) k_ = 0;
  }

  static int cmp_rat(const Rat& x, const Rat& y) { return x < y ? -1 : (x == y ? 0 : 1); }

  static Int common_radicand(const QuadNum& x, const QuadNum& y, const char* op) {
    if (x.k_ == y.k_) return x.k_;
    if (x.k_ == 0) return y.k_;
    if (y.k_ == 0) return x.k_;
    fail(Errc::MixedRadicand, std::string("operands of '") + op + "' live in Q(sqrt(" + x.k_.str() +
                                  ")) and Q(sqrt(" + y.k_.str() + "))");
  }

  void normalize() {
    if (k_ < 0) fail(Errc::NegativeRadicand, "radicand " + k_.str());
    if (k_ == 0) {
      b_ = 0;
      return;
    }
    if (b_ == 0) {
      k_ = 0;
      return;
    }
    auto [s, r] = squarefree_decompose(k_);
    if (r == 1) {
      a_ += b_ * Rat(s);
      b_ = 0;
      k_ = 0;
      return;
    }
    b_ *= Rat(s);
    k_ = r;
  }

  Rat a_, b_;
  Int k_;
};

// Square root within Q or within the field of x; nullopt if the root does not
// lie in that field.
inline std::optional<QuadNum> qn_sqrt(const QuadNum& x) {
  if (x.sign() < 0) fail(Errc::NegativeRadicand, "sqrt of negative value " + x.to_string());
  if (x.is_rational()) {
    const Rat& v = x.a();
    if (v == 0) return QuadNum(0);
    // sqrt(p/q) = sqrt(p q)/q; split off the square part of p q.
    auto [s, r] = squarefree_decompose(numerator(v) * denominator(v));
    return QuadNum(Rat(0), Rat(s, denominator(v)), r);
  }
  // Want y = c + e sqrt(k) with y^2 = x: c^2 + e^2 k = a, 2 c e = b.
  Rat disc = x.a() * x.a() - x.b() * x.b() * Rat(x.k());
  auto g = exact_rat_sqrt(disc);
  if (!g) return std::nullopt;
  for (const Rat& c2 : {Rat((x.a() + *g) / 2), Rat((x.a() - *g) / 2)}) {
    auto c = exact_rat_sqrt(c2);
    if (!c || *c == 0) continue;
    Rat e = x.b() / (2 * *c);
    QuadNum y(*c, e, x.k());
    if (y.square() == x) return y.sign() >= 0 ? y : -y;
  }
  return std::nullopt;
}

// Exact order for values from possibly different quadratic fields. Arithmetic
// across fields stays forbidden; ordering a + b*sqrt(k) against c + e*sqrt(m)
// only needs sign analysis of A + B*sqrt(k) + C*sqrt(m), done by repeated
// squaring. Used to arrange table rows whose endpoints mix radicands.
inline int qn_cross_cmp(const QuadNum& x, const QuadNum& y) {
  if (x.k() == y.k() || x.k() == 0 || y.k() == 0) return qn_cmp(x, y);
  const Rat A = x.a() - y.a();
  const Rat& B = x.b();
  const Rat C = -y.b();
  const Rat K(x.k()), M(y.k());
  // sign of u = B sqrt(k) + C sqrt(m); B, C nonzero and k != m squarefree,
  // so u != 0 and B^2 k != C^2 m.
  int sB = sign_of(B), sC = sign_of(C);
  int su = (sB == sC) ? sB : (B * B * K > C * C * M ? sB : sC);
  if (A == 0) return su;
  int sA = sign_of(A);
  if (sA == su) return sA;
  // |A| vs |u|: compare A^2 with u^2 = B^2 k + C^2 m + 2 B C sqrt(k m).
  Rat L = A * A - B * B * K - C * C * M;
  Rat Rc = 2 * B * C;  // against Rc * sqrt(k m)
  int sL = sign_of(L), sR = sign_of(Rc);
  int cmp_abs;  // sign of A^2 - u^2
  if (sL != sR) {
    cmp_abs = sL > sR ? 1 : -1;
  } else if (sL == 0) {
    cmp_abs = 0;
  } else {
    Rat L2 = L * L, R2 = Rc * Rc * K * M;
    if (L2 == R2) {
      cmp_abs = 0;
    } else {
      cmp_abs = ((L2 > R2) == (sL > 0)) ? 1 : -1;
    }
  }
  if (cmp_abs == 0) return 0;  // |A| == |u| with opposite signs cannot occur
  return cmp_abs > 0 ? sA : su;
}

// Parses "a", "a+b*sqrt(k)", "b*sqrt(k)", "sqrt(k)" and sign variants,
// with a, b rational as "p" or "p/q".
inline QuadNum parse_quad(std::string_view s) {
  size_t i = 0;
  auto syntax = [&](const std::string& what) {
    fail(Errc::SyntaxError, what + " at position " + std::to_string(i) + " in '" + std::string(s) + "'");
  };
  auto parse_sqrt_tail = [&]() -> Int {
    // expects "sqrt(" at s[i]
    if (s.substr(i, 5) != "sqrt(") syntax("expected sqrt(");
    i += 5;
    size_t j = i;
    Int k = 0;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) {
      k = k * 10 + (s[j] - '0');
      ++j;
    }
    if (j == i) syntax("expected radicand digits");
    if (j >= s.size() || s[j] != ')') {
      i = j;
      syntax("expected ')'");
    }
    i = j + 1;
    return k;
  };

  Rat sign1 = 1;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
    if (s[i] == '-') sign1 = -1;
    ++i;
  }
  Rat first = 1;
  bool first_is_coeff = false;
  if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
    size_t used = 0;
    first = parse_rat(s.substr(i), &used);
    i += used;
    first_is_coeff = true;
    if (i < s.size() && s[i] == '*') ++i;
  }
  if (i < s.size() && s[i] == 's') {
    Int k = parse_sqrt_tail();
    QuadNum lead(Rat(0), sign1 * first, k);
    if (i == s.size()) return lead;
    syntax("trailing characters");
  }
  if (!first_is_coeff) syntax("expected number");
  QuadNum a(sign1 * first);
  if (i == s.size()) return a;
  if (s[i] != '+' && s[i] != '-') syntax("expected '+' or '-'");
  Rat sign2 = s[i] == '-' ? -1 : 1;
  ++i;
  Rat coeff = 1;
  if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
    size_t used = 0;
    coeff = parse_rat(s.substr(i), &used);
    i += used;
    if (i < s.size() && s[i] == '*') ++i;
  }
  if (i >= s.size() || s[i] != 's') syntax("expected sqrt(");
  Int k = parse_sqrt_tail();
  if (i != s.size()) syntax("trailing characters");
  return a + QuadNum(Rat(0), sign2 * coeff, k);
}

}  // namespace planeval
