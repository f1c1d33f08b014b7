#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace sturmlab {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// floor(sqrt(n)) for n >= 0.
Int isqrt(const Int& n);

// Floor and ceiling division for any signs of a and b (b != 0).
Int floor_div(const Int& a, const Int& b);
Int ceil_div(const Int& a, const Int& b);

Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);

bool is_perfect_square(const Int& n);
bool is_squarefree(const Int& n);

bool fits_int64(const Int& n);
std::int64_t to_int64(const Int& n);  // throws std::overflow_error

inline std::string to_string(const Int& n) { return n.str(); }

}  // namespace sturmlab
