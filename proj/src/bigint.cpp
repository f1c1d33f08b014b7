#include "sturmlab/bigint.hpp"

#include <limits>
#include <stdexcept>

namespace sturmlab {

Int isqrt(const Int& n) {
  if (n < 0) throw std::domain_error("isqrt of a negative integer");
  return boost::multiprecision::sqrt(n);
}

Int floor_div(const Int& a, const Int& b) {
  if (b == 0) throw std::domain_error("division by zero");
  Int q = a / b;  // truncates toward zero
  Int r = a - q * b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

Int ceil_div(const Int& a, const Int& b) { return -floor_div(-a, b); }

Int gcd(const Int& a, const Int& b) {
  return boost::multiprecision::gcd(a, b);
}

Int lcm(const Int& a, const Int& b) {
  if (a == 0 || b == 0) return 0;
  Int g = gcd(a, b);
  Int l = (a / g) * b;
  return l < 0 ? Int(-l) : l;
}

bool is_perfect_square(const Int& n) {
  if (n < 0) return false;
  Int s = isqrt(n);
  return s * s == n;
}

bool is_squarefree(const Int& n) {
  if (n <= 0) return false;
  Int m = n;
  for (Int f = 2; f * f <= m; ++f) {
    if (m % f == 0) {
      m /= f;
      if (m % f == 0) return false;
    }
    if (f > 10'000'000) throw std::invalid_argument("radicand too large to test for squarefreeness");
  }
  return true;
}

bool fits_int64(const Int& n) {
  return n >= std::numeric_limits<std::int64_t>::min() &&
         n <= std::numeric_limits<std::int64_t>::max();
}

std::int64_t to_int64(const Int& n) {
  if (!fits_int64(n)) throw std::overflow_error("integer does not fit in 64 bits: " + n.str());
  return static_cast<std::int64_t>(n);
}

}  // namespace sturmlab
