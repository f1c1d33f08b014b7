#pragma once

#include <cstdint>
#include <vector>

#include "sturmlab/torus/quadratic.hpp"

namespace sturmlab::torus {

struct RecordMinimum {
  std::int64_t k = 0;
  double value = 0;  // k * dist({k phi}, 0)
};

struct BadlyScan {
  Quad min_value;         // exact min over k <= k_max of k * dist({k phi}, 0)
  Rational c_est;         // rational lower bound of min_value, within 1e-30
  std::int64_t argmin_k = 0;
  std::int64_t d = 0;     // ceil(1 / c_est)
  std::vector<RecordMinimum> records;  // strict running minima in k order
};

/// Scan of k * ||k phi|| for 1 <= k <= k_max on the exact kernel.
BadlyScan badly_constant_scan(const Quad& phi, std::int64_t k_max);

}  // namespace sturmlab::torus
