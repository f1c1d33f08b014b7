#pragma once

#include <compare>
#include <ostream>
#include <string>
#include <utility>

#include "sturmlab/bigint.hpp"

namespace sturmlab::torus {

/// An element (p + q*sqrt(d)) / r of the real quadratic field Q(sqrt(d)).
///
/// Values are kept canonical: gcd(p, q, r) = 1 and r > 0. A value with q = 0 is
/// rational; it still remembers its radicand so that it can be combined with
/// irrational values of the same field, and it is compatible with every field.
/// All comparisons are exact (integer sign analysis, no floating point).
class QuadraticIrrational {
 public:
  QuadraticIrrational() = default;

  /// Validates r != 0, d > 0 and squarefree. d = 1 folds q into p.
  static QuadraticIrrational make(Int p, Int q, Int r, Int d);
  static QuadraticIrrational integer(const Int& n, const Int& d = 1);
  static QuadraticIrrational rational(const Int& num, const Int& den, const Int& d = 1);

  const Int& p() const { return p_; }
  const Int& q() const { return q_; }
  const Int& r() const { return r_; }
  const Int& d() const { return d_; }

  bool is_rational() const { return q_ == 0; }
  int sign() const;

  QuadraticIrrational operator-() const;
  QuadraticIrrational conjugate() const;
  QuadraticIrrational reciprocal() const;  // throws std::domain_error on zero

  friend QuadraticIrrational operator+(const QuadraticIrrational& a, const QuadraticIrrational& b);
  friend QuadraticIrrational operator-(const QuadraticIrrational& a, const QuadraticIrrational& b);
  friend QuadraticIrrational operator*(const QuadraticIrrational& a, const QuadraticIrrational& b);
  friend QuadraticIrrational operator/(const QuadraticIrrational& a, const QuadraticIrrational& b);
  friend QuadraticIrrational operator*(const QuadraticIrrational& a, const Int& k);
  friend QuadraticIrrational operator*(const Int& k, const QuadraticIrrational& a) { return a * k; }
  friend QuadraticIrrational operator/(const QuadraticIrrational& a, const Int& k);

  QuadraticIrrational& operator+=(const QuadraticIrrational& o) { return *this = *this + o; }
  QuadraticIrrational& operator-=(const QuadraticIrrational& o) { return *this = *this - o; }

  Int floor() const;
  QuadraticIrrational frac() const;  // in [0, 1)
  std::pair<Int, QuadraticIrrational> floor_frac() const;

  double to_double() const;
  long double to_long_double() const;
  std::string to_string() const;

  friend bool operator==(const QuadraticIrrational& a, const QuadraticIrrational& b);
  friend std::strong_ordering operator<=>(const QuadraticIrrational& a,
                                          const QuadraticIrrational& b);

 private:
  QuadraticIrrational(Int p, Int q, Int r, Int d, int /*unchecked*/);
  void normalize();

  Int p_ = 0;
  Int q_ = 0;
  Int r_ = 1;
  Int d_ = 1;
};

using Quad = QuadraticIrrational;

/// Exact three-way comparison. Throws std::invalid_argument when both values are
/// irrational over different radicands.
std::strong_ordering cmp(const Quad& a, const Quad& b);

/// The common radicand of two values, or throws if they live in different fields.
Int common_radicand(const Quad& a, const Quad& b);

/// sign(a + b*sqrt(d)) for integers a, b and d > 0 not a perfect square
/// (or b = 0).
int surd_sign(const Int& a, const Int& b, const Int& d);

/// Circle distance of x to 0, i.e. min({x}, 1 - {x}).
Quad circle_distance_to_zero(const Quad& x);

std::ostream& operator<<(std::ostream& os, const Quad& x);

}  // namespace sturmlab::torus
