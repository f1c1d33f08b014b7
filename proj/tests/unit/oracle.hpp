#pragma once

// Independent 50-digit decimal float oracle for quadratic irrationals.
#include <boost/multiprecision/cpp_dec_float.hpp>

#include <vector>

#include "sturmlab/torus/quadratic.hpp"

namespace oracle {

using F50 = boost::multiprecision::cpp_dec_float_50;

inline F50 value(const sturmlab::torus::Quad& x) {
  F50 p(x.p().str()), q(x.q().str()), r(x.r().str()), d(x.d().str());
  return (p + q * boost::multiprecision::sqrt(d)) / r;
}

inline F50 frac(const F50& v) { return v - boost::multiprecision::floor(v); }

// Continued fraction by repeated reciprocals; only the first few dozen terms are
// trustworthy at 50 digits.
inline std::vector<long long> cf(F50 v, int terms) {
  std::vector<long long> out;
  for (int i = 0; i < terms; ++i) {
    F50 a = boost::multiprecision::floor(v);
    out.push_back(a.convert_to<long long>());
    v = 1 / (v - a);
  }
  return out;
}

}  // namespace oracle
