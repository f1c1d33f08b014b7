#include "sturmlab/torus/quadratic.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace sturmlab::torus {

QuadraticIrrational::QuadraticIrrational(Int p, Int q, Int r, Int d, int)
    : p_(std::move(p)), q_(std::move(q)), r_(std::move(r)), d_(std::move(d)) {
  normalize();
}

QuadraticIrrational QuadraticIrrational::make(Int p, Int q, Int r, Int d) {
  if (r == 0) throw std::invalid_argument("quadratic irrational: denominator r must be nonzero");
  if (d <= 0) throw std::invalid_argument("quadratic irrational: radicand d must be positive");
  if (!is_squarefree(d)) {
    throw std::invalid_argument("quadratic irrational: radicand d = " + d.str() +
                                " is not squarefree");
  }
  return QuadraticIrrational(std::move(p), std::move(q), std::move(r), std::move(d), 0);
}

QuadraticIrrational QuadraticIrrational::integer(const Int& n, const Int& d) {
  return make(n, 0, 1, d);
}

QuadraticIrrational QuadraticIrrational::rational(const Int& num, const Int& den, const Int& d) {
  return make(num, 0, den, d);
}

void QuadraticIrrational::normalize() {
  if (d_ == 1) {
    p_ += q_;
    q_ = 0;
  }
  Int g = gcd(gcd(p_, q_), r_);
  if (g != 0 && g != 1) {
    p_ /= g;
    q_ /= g;
    r_ /= g;
  }
  if (r_ < 0) {
    p_ = -p_;
    q_ = -q_;
    r_ = -r_;
  }
}

int surd_sign(const Int& a, const Int& b, const Int& d) {
  if (a >= 0 && b >= 0) return (a == 0 && b == 0) ? 0 : 1;
  if (a <= 0 && b <= 0) return -1;
  // Opposite signs: compare a^2 with b^2 d.
  Int a2 = a * a;
  Int b2d = b * b * d;
  if (a > 0) return a2 > b2d ? 1 : (a2 < b2d ? -1 : 0);
  return b2d > a2 ? 1 : (b2d < a2 ? -1 : 0);
}

Int common_radicand(const Quad& a, const Quad& b) {
  if (a.is_rational()) return b.d();
  if (b.is_rational()) return a.d();
  if (a.d() != b.d()) {
    throw std::invalid_argument("values live in different quadratic fields: sqrt(" + a.d().str() +
                                ") vs sqrt(" + b.d().str() + ")");
  }
  return a.d();
}

int QuadraticIrrational::sign() const { return surd_sign(p_, q_, d_); }

QuadraticIrrational QuadraticIrrational::operator-() const {
  return QuadraticIrrational(-p_, -q_, r_, d_, 0);
}

QuadraticIrrational QuadraticIrrational::conjugate() const {
  return QuadraticIrrational(p_, -q_, r_, d_, 0);
}

QuadraticIrrational QuadraticIrrational::reciprocal() const {
  Int norm = p_ * p_ - q_ * q_ * d_;
  if (norm == 0) throw std::domain_error("reciprocal of zero");
  return QuadraticIrrational(r_ * p_, -r_ * q_, norm, d_, 0);
}

QuadraticIrrational operator+(const QuadraticIrrational& a, const QuadraticIrrational& b) {
  Int d = common_radicand(a, b);
  return QuadraticIrrational(a.p_ * b.r_ + b.p_ * a.r_, a.q_ * b.r_ + b.q_ * a.r_, a.r_ * b.r_,
                             d, 0);
}

QuadraticIrrational operator-(const QuadraticIrrational& a, const QuadraticIrrational& b) {
  return a + (-b);
}

QuadraticIrrational operator*(const QuadraticIrrational& a, const QuadraticIrrational& b) {
  Int d = common_radicand(a, b);
  return QuadraticIrrational(a.p_ * b.p_ + a.q_ * b.q_ * d, a.p_ * b.q_ + b.p_ * a.q_,
                             a.r_ * b.r_, d, 0);
}

QuadraticIrrational operator/(const QuadraticIrrational& a, const QuadraticIrrational& b) {
  return a * b.reciprocal();
}

QuadraticIrrational operator*(const QuadraticIrrational& a, const Int& k) {
  return QuadraticIrrational(a.p_ * k, a.q_ * k, a.r_, a.d_, 0);
}

QuadraticIrrational operator/(const QuadraticIrrational& a, const Int& k) {
  if (k == 0) throw std::domain_error("division by zero");
  return QuadraticIrrational(a.p_, a.q_, a.r_ * k, a.d_, 0);
}

Int QuadraticIrrational::floor() const {
  if (q_ == 0) return floor_div(p_, r_);
  // floor(q sqrt d) is exact because q^2 d is not a perfect square.
  Int s = isqrt(q_ * q_ * d_);
  if (q_ < 0) s = -s - 1;
  return floor_div(p_ + s, r_);
}

QuadraticIrrational QuadraticIrrational::frac() const {
  return *this - QuadraticIrrational::integer(floor(), d_);
}

std::pair<Int, QuadraticIrrational> QuadraticIrrational::floor_frac() const {
  Int f = floor();
  return {f, *this - QuadraticIrrational::integer(f, d_)};
}

long double QuadraticIrrational::to_long_double() const {
  const long double rd = static_cast<long double>(r_);
  if (q_ == 0) return static_cast<long double>(p_) / rd;
  const long double root = std::sqrt(static_cast<long double>(d_));
  const long double qs = static_cast<long double>(q_) * root;
  if ((p_ >= 0) == (q_ >= 0)) return (static_cast<long double>(p_) + qs) / rd;
  // Opposite signs: use the conjugate to avoid cancellation.
  Int norm = p_ * p_ - q_ * q_ * d_;
  return static_cast<long double>(norm) / (rd * (static_cast<long double>(p_) - qs));
}

double QuadraticIrrational::to_double() const { return static_cast<double>(to_long_double()); }

std::string QuadraticIrrational::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

bool operator==(const QuadraticIrrational& a, const QuadraticIrrational& b) {
  return cmp(a, b) == std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const QuadraticIrrational& a, const QuadraticIrrational& b) {
  return cmp(a, b);
}

std::strong_ordering cmp(const Quad& a, const Quad& b) {
  Int d = common_radicand(a, b);
  Int num_p = a.p() * b.r() - b.p() * a.r();
  Int num_q = a.q() * b.r() - b.q() * a.r();
  int s = surd_sign(num_p, num_q, d);
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Quad circle_distance_to_zero(const Quad& x) {
  Quad f = x.frac();
  Quad g = Quad::integer(1, f.d()) - f;
  return f < g ? f : g;
}

std::ostream& operator<<(std::ostream& os, const Quad& x) {
  if (x.is_rational()) {
    os << x.p();
    if (x.r() != 1) os << "/" << x.r();
    return os;
  }
  os << "(" << x.p() << (x.q() < 0 ? " - " : " + ");
  Int aq = x.q() < 0 ? Int(-x.q()) : x.q();
  if (aq != 1) os << aq << "*";
  os << "sqrt(" << x.d() << "))";
  if (x.r() != 1) os << "/" << x.r();
  return os;
}

}  // namespace sturmlab::torus
