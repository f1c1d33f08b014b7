#include "sturmlab/torus/field.hpp"

#include <cmath>
#include <stdexcept>

namespace sturmlab::torus {

namespace {

constexpr i128 kLimit = static_cast<i128>(1) << 62;

Int to_int(i128 v) {
  const bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  Int hi = static_cast<std::uint64_t>(u >> 64);
  Int lo = static_cast<std::uint64_t>(u);
  Int out = (hi << 64) | lo;
  return neg ? Int(-out) : out;
}

i128 to_i128(const Int& v) {
  const Int lim = Int(1) << 62;
  if (v > lim || v < -lim) throw ExactRangeError("value out of the 128-bit kernel range");
  return static_cast<i128>(static_cast<std::int64_t>(v));
}

i128 floor_div128(i128 a, i128 b) {
  i128 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

i128 isqrt128(i128 n) {
  if (n < 0) throw std::domain_error("isqrt128 of a negative value");
  i128 s = static_cast<i128>(std::sqrt(static_cast<long double>(n)));
  while (s > 0 && s * s > n) --s;
  while ((s + 1) * (s + 1) <= n) ++s;
  return s;
}

FieldFrame FieldFrame::common(std::initializer_list<const Quad*> values) {
  Int d = 1;
  Int R = 1;
  for (const Quad* v : values) {
    if (!v->is_rational()) {
      if (d != 1 && d != v->d()) throw std::invalid_argument("field frame: mixed radicands");
      d = v->d();
    }
    R = lcm(R, v->r());
  }
  FieldFrame f;
  if (d > (Int(1) << 40)) throw ExactRangeError("field frame: radicand too large");
  f.d_ = static_cast<std::int64_t>(d);
  f.R_ = to_i128(R);
  f.b_limit_ = kLimit / (isqrt128(f.d_) + 1);
  return f;
}

FieldFrame::Point FieldFrame::checked(Point x) const {
  if (x.a > kLimit || x.a < -kLimit || x.b > b_limit_ || x.b < -b_limit_) {
    throw ExactRangeError("exact kernel: coefficient growth beyond 2^62");
  }
  return x;
}

FieldFrame::Point FieldFrame::embed(const Quad& x) const {
  if (!x.is_rational() && x.d() != d_) throw std::invalid_argument("field frame: wrong radicand");
  const Int R = to_int(R_);
  if (R % x.r() != 0) throw std::invalid_argument("field frame: denominator does not divide R");
  const Int m = R / x.r();
  return checked({to_i128(x.p() * m), to_i128(x.q() * m)});
}

Quad FieldFrame::to_quad(const Point& x) const {
  return Quad::make(to_int(x.a), to_int(x.b), to_int(R_), d_);
}

int FieldFrame::sign(const Point& x) const {
  const i128 a = x.a, b = x.b;
  if (b == 0) return (a > 0) - (a < 0);
  if (a >= 0 && b > 0) return 1;
  if (a <= 0 && b < 0) return -1;
  // Opposite strict signs; a^2 == b^2 d is impossible for non-square d.
  const i128 a2 = a * a;
  const i128 b2d = b * b * d_;
  if (a > 0) return a2 > b2d ? 1 : -1;
  return b2d > a2 ? 1 : -1;
}

FieldFrame::Point FieldFrame::scale(const Point& x, std::int64_t k) const {
  const i128 lim = kLimit;
  if (k != 0 && ((x.a > lim / (k < 0 ? -k : k)) || (x.a < -lim / (k < 0 ? -k : k)) ||
                 (x.b > lim / (k < 0 ? -k : k)) || (x.b < -lim / (k < 0 ? -k : k)))) {
    throw ExactRangeError("exact kernel: product beyond 2^62");
  }
  return checked({x.a * k, x.b * k});
}

i128 FieldFrame::floor_surd(i128 b) const {
  if (b == 0) return 0;
  const i128 s = isqrt128(b * b * d_);
  if (d_ == 1 || s * s == b * b * d_) return b > 0 ? s : -s;
  return b > 0 ? s : -s - 1;
}

std::int64_t FieldFrame::floor(const Point& x) const {
  return static_cast<std::int64_t>(floor_div128(x.a + floor_surd(x.b), R_));
}

FieldFrame::Point FieldFrame::frac(const Point& x) const {
  const i128 f = floor_div128(x.a + floor_surd(x.b), R_);
  return checked({x.a - f * R_, x.b});
}

FieldFrame::Point FieldFrame::circle_distance_to_zero(const Point& x) const {
  const Point f = frac(x);
  const Point g{R_ - f.a, -f.b};
  return cmp(f, g) <= 0 ? f : g;
}

double FieldFrame::to_double(const Point& x) const {
  const long double root = std::sqrt(static_cast<long double>(d_));
  const long double a = static_cast<long double>(x.a);
  const long double bs = static_cast<long double>(x.b) * root;
  const long double R = static_cast<long double>(R_);
  if ((x.a >= 0) == (x.b >= 0) || x.b == 0) return static_cast<double>((a + bs) / R);
  const long double norm = static_cast<long double>(x.a * x.a - x.b * x.b * d_);
  return static_cast<double>(norm / (R * (a - bs)));
}

OrbitCursor::OrbitCursor(const FieldFrame& frame, FieldFrame::Point start, FieldFrame::Point step)
    : frame_(frame), x_(frame.frac(start)), step_(frame.frac(step)) {}

}  // namespace sturmlab::torus
