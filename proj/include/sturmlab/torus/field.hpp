#pragma once

#include <cstdint>
#include <initializer_list>

#include "sturmlab/errors.hpp"
#include "sturmlab/torus/quadratic.hpp"

namespace sturmlab::torus {

using i128 = __int128;

/// Fast exact kernel: values (a + b*sqrt(d)) / R over one fixed denominator R,
/// with a and b held in 128-bit integers. Every operation is exact; leaving the
/// safe range (|a| <= 2^62, |b|*sqrt(d) <= 2^62) throws ExactRangeError, so
/// products in the sign test never overflow. Results agree with the bignum
/// QuadraticIrrational path bit for bit.
class FieldFrame {
 public:
  struct Point {
    i128 a = 0;
    i128 b = 0;
  };

  /// A frame whose denominator is the lcm of the given values' denominators.
  static FieldFrame common(std::initializer_list<const Quad*> values);
  static FieldFrame common(const Quad& x, const Quad& y) { return common({&x, &y}); }

  std::int64_t d() const { return d_; }
  i128 R() const { return R_; }

  Point embed(const Quad& x) const;
  Point integer(std::int64_t n) const { return checked({static_cast<i128>(n) * R_, 0}); }
  Quad to_quad(const Point& x) const;

  int sign(const Point& x) const;
  int cmp(const Point& x, const Point& y) const { return sign(sub(x, y)); }

  Point add(const Point& x, const Point& y) const { return checked({x.a + y.a, x.b + y.b}); }
  Point sub(const Point& x, const Point& y) const { return checked({x.a - y.a, x.b - y.b}); }
  Point scale(const Point& x, std::int64_t k) const;

  /// floor(b * sqrt(d)) exactly.
  i128 floor_surd(i128 b) const;
  std::int64_t floor(const Point& x) const;
  Point frac(const Point& x) const;
  /// min({x}, 1 - {x}).
  Point circle_distance_to_zero(const Point& x) const;

  double to_double(const Point& x) const;

  Point checked(Point x) const;

 private:
  std::int64_t d_ = 1;
  i128 R_ = 1;
  i128 b_limit_ = 0;
};

/// Exact orbit x_{n+1} = {x_n + step} in a FieldFrame.
class OrbitCursor {
 public:
  OrbitCursor(const FieldFrame& frame, FieldFrame::Point start, FieldFrame::Point step);

  const FieldFrame::Point& point() const { return x_; }
  void advance() {
    x_ = frame_.add(x_, step_);
    if (frame_.sign({x_.a - frame_.R(), x_.b}) >= 0) x_.a -= frame_.R();
  }

 private:
  FieldFrame frame_;
  FieldFrame::Point x_;
  FieldFrame::Point step_;
};

/// Exact 128-bit floor(sqrt(n)) for 0 <= n < 2^126.
i128 isqrt128(i128 n);

}  // namespace sturmlab::torus
