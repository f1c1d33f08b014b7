#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sturmlab/torus/arc.hpp"
#include "sturmlab/torus/badly.hpp"

namespace sturmlab::ergodicity {

using torus::Arc;
using torus::Quad;

struct HittingOptions {
  /// Also replay the orbit after reflecting (when {k phi} > 1/2) and rotating
  /// so that P starts at 1/2, and run the local check of case 3 there.
  bool proof_frame = false;
};

/// Hits of the accelerated orbit x_i = x0 + i k phi, i = 1..dk, in P.
struct HittingResult {
  std::int64_t k = 0;
  std::int64_t d = 0;
  std::int64_t hits = 0;
  double bound = 0;  // d k / 6
  bool pass = false;
  std::int64_t n_bracket = 0;  // beta in (1/(n+1), 1/n), beta = min({k phi}, 1 - {k phi})
  int case_id = 0;             // 3: n <= 4; 1: n <= dk/2 - 1; 2: otherwise
  bool reflected = false;      // {k phi} > 1/2
  std::int64_t case_bound = 0;  // the counting estimate of the applicable case
  std::int64_t proof_frame_hits = -1;
  bool case3_local_ok = true;  // every 4 consecutive points meet [1/2, 1) (proof frame, case 3)
};

/// Throws HypothesisError when P is shorter than 1/2 or phi is rational.
HittingResult hitting_count(const Quad& phi, const Quad& x0, std::int64_t k, std::int64_t d,
                            const Arc& P, const HittingOptions& opts = {});

struct HittingScan {
  std::vector<HittingResult> results;  // in k order
  std::optional<std::int64_t> k_star;  // least k with every later k passing
  double r_empirical = 0;              // min hits / k
  std::int64_t d = 0;
};

HittingScan hitting_scan(const Quad& phi, const Quad& x0, const Arc& P, std::int64_t k_lo,
                         std::int64_t k_hi, std::int64_t d, const HittingOptions& opts = {},
                         unsigned threads = 1);

/// d = ceil(1 / c_est) from a scan over k <= k_scan.
std::int64_t hitting_d(const Quad& phi, std::int64_t k_scan);

/// The arc [1 - phi, phi] of forbidden distances.
Arc forbidden_arc(const Quad& phi);

/// count points {j/count + j phi/3}, j = 0..count-1.
std::vector<Quad> spread_points(const Quad& phi, std::int64_t count);

struct LemmaReport {
  std::int64_t k_max = 0;
  Quad min_value;      // min k * ||k phi||
  Rational c_est;
  std::int64_t argmin_k = 0;
  bool bound_holds = false;  // k ||k phi|| >= min_value > c_est for every k
  std::vector<torus::RecordMinimum> smallest;  // the three smallest, ascending
  std::vector<torus::RecordMinimum> records;   // strict running minima
  std::vector<std::int64_t> convergent_denominators;
  bool records_at_convergents = false;
};

/// Checks ||k phi|| > c_est / k for k <= k_max and locates the record minima.
LemmaReport lemma_bound_check(const Quad& phi, std::int64_t k_max);

}  // namespace sturmlab::ergodicity
