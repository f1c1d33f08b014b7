#pragma once

#include "sturmlab/torus/quadratic.hpp"

namespace sturmlab::torus {

/// A circular arc on R/Z. lo lies in [0,1), hi in [0,1]; lo > hi wraps through 0.
struct Arc {
  Quad lo;
  Quad hi;
  bool lo_closed = true;
  bool hi_closed = false;

  /// Validates the endpoint ranges and shared radicand.
  static Arc make(Quad lo, Quad hi, bool lo_closed, bool hi_closed);
  static Arc closed(Quad lo, Quad hi) { return make(std::move(lo), std::move(hi), true, true); }
  static Arc full_circle(const Int& d = 1);

  bool wraps() const { return lo > hi; }
  Quad length() const;
  bool contains(const Quad& x) const;  // x must lie in [0,1)
  std::string to_string() const;
};

/// Exact membership of x in A. x is reduced mod 1 first.
bool in_arc(const Quad& x, const Arc& A);

}  // namespace sturmlab::torus
