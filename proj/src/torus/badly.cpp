#include "sturmlab/torus/badly.hpp"

#include <stdexcept>

#include "sturmlab/errors.hpp"
#include "sturmlab/torus/field.hpp"

namespace sturmlab::torus {

BadlyScan badly_constant_scan(const Quad& phi, std::int64_t k_max) {
  if (phi.is_rational()) throw HypothesisError("phi must be irrational");
  if (k_max < 1) throw std::invalid_argument("badly_constant_scan: k_max must be >= 1");

  const FieldFrame frame = FieldFrame::common(phi, phi);
  OrbitCursor orbit(frame, frame.embed(phi), frame.embed(phi));
  FieldFrame::Point best{};
  BadlyScan out;
  for (std::int64_t k = 1; k <= k_max; ++k, orbit.advance()) {
    const auto val = frame.scale(frame.circle_distance_to_zero(orbit.point()), k);
    if (k == 1 || frame.cmp(val, best) < 0) {
      best = val;
      out.argmin_k = k;
      out.records.push_back({k, frame.to_double(val)});
    }
  }
  out.min_value = frame.to_quad(best);
  const Int scale = boost::multiprecision::pow(Int(10), 30);
  out.c_est = Rational((out.min_value * scale).floor(), scale);
  const Rational inv = 1 / out.c_est;
  out.d = to_int64(ceil_div(numerator(inv), denominator(inv)));
  return out;
}

}  // namespace sturmlab::torus
