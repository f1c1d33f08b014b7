#include "sturmlab/torus/arc.hpp"

#include <stdexcept>

namespace sturmlab::torus {

Arc Arc::make(Quad lo, Quad hi, bool lo_closed, bool hi_closed) {
  const Quad zero = Quad::integer(0, lo.d());
  const Quad one = Quad::integer(1, lo.d());
  common_radicand(lo, hi);
  if (lo < zero || lo >= one) throw std::invalid_argument("arc: lo must lie in [0,1)");
  if (hi < zero || hi > one) throw std::invalid_argument("arc: hi must lie in [0,1]");
  return Arc{std::move(lo), std::move(hi), lo_closed, hi_closed};
}

Arc Arc::full_circle(const Int& d) {
  return Arc{Quad::integer(0, d), Quad::integer(1, d), true, false};
}

Quad Arc::length() const {
  if (!wraps()) return hi - lo;
  return Quad::integer(1, lo.d()) - lo + hi;
}

bool Arc::contains(const Quad& x) const {
  const auto above_lo = [&] { auto c = cmp(x, lo); return c > 0 || (lo_closed && c == 0); };
  const auto below_hi = [&] { auto c = cmp(x, hi); return c < 0 || (hi_closed && c == 0); };
  if (!wraps()) return above_lo() && below_hi();
  return above_lo() || below_hi();
}

std::string Arc::to_string() const {
  return std::string(lo_closed ? "[" : "(") + lo.to_string() + ", " + hi.to_string() +
         (hi_closed ? "]" : ")");
}

bool in_arc(const Quad& x, const Arc& A) { return A.contains(x.frac()); }

}  // namespace sturmlab::torus
