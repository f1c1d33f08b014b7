#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "sturmlab/torus/quadratic.hpp"

namespace sturmlab::torus {

struct PeriodicTail {
  std::size_t start = 0;
  std::size_t length = 0;
};

struct ContinuedFraction {
  std::vector<Int> partial_quotients;  // a0; a1, a2, ...
  std::optional<PeriodicTail> periodic_tail;

  /// The i-th partial quotient, unrolling the periodic tail when present.
  /// Throws std::out_of_range past the computed prefix of an aperiodic expansion.
  const Int& quotient(std::size_t i) const;
  std::size_t available_depth() const;  // SIZE_MAX when periodic

  /// True when a period was detected, i.e. the quotients are bounded.
  bool bounded_quotients() const { return periodic_tail.has_value(); }
  Int max_quotient() const;  // over indices >= 1 (period and pre-period)

  std::string to_string() const;  // "[0; 1, 3, (4)]"
};

/// Expansion of an irrational quadratic x by the surd recurrence on (P, Q).
/// Throws std::invalid_argument for rational input.
ContinuedFraction cf_expand(const Quad& x, std::size_t max_depth);

/// Convergents p_i/q_i for i = 0..n (n + 1 entries).
std::vector<std::pair<Int, Int>> convergents(const ContinuedFraction& cf, std::size_t n);

/// Convergent denominators q_i <= q_max.
std::vector<Int> convergent_denominators(const ContinuedFraction& cf, const Int& q_max);

}  // namespace sturmlab::torus
