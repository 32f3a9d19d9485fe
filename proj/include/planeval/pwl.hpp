#pragma once

#include <vector>

#include "planeval/quadnum.hpp"

namespace planeval {

// One affine piece value(t) = slope * t + intercept on [lo, hi]
// (or [lo, infinity) when unbounded is set).
struct PwlPiece {
  QuadNum lo;
  QuadNum hi;
  bool unbounded = false;
  Rat slope;
  Rat intercept;

  QuadNum value_at(const QuadNum& t) const { return QuadNum(slope) * t + QuadNum(intercept); }
};

// Continuous piecewise linear function given by consecutive pieces; adjacent
// pieces share their endpoint and agree there.
struct PiecewiseLinearFn {
  std::vector<PwlPiece> pieces;

  bool covers(const QuadNum& t) const {
    for (const auto& p : pieces)
      if (qn_cross_cmp(p.lo, t) <= 0 && (p.unbounded || qn_cross_cmp(t, p.hi) <= 0)) return true;
    return false;
  }

  QuadNum eval(const QuadNum& t) const {
    for (const auto& p : pieces)
      if (qn_cross_cmp(p.lo, t) <= 0 && (p.unbounded || qn_cross_cmp(t, p.hi) <= 0)) return p.value_at(t);
    fail(Errc::InvalidParameter, "t = " + t.to_string() + " outside the function domain");
  }
};

}  // namespace planeval
