#pragma once

#include <cstdint>
#include <vector>

#include "sturmlab/hamiltonian/spec.hpp"
#include "sturmlab/words/rotation.hpp"

namespace sturmlab::hamiltonian {

struct DensityEstimate {
  double value = 0;
  std::vector<std::int64_t> window_sizes;
  std::vector<double> per_window;         // H(window) / |window|
  std::vector<double> per_window_energy;  // H(window)
  bool is_exact = false;  // true when |value - density| <= tail_bound is proved
  double tail_bound = 0;
  std::int64_t horizon = 0;  // pair-distance truncation, 0 when none
};

struct StreamOptions {
  std::int64_t horizon = 0;  // 0: all pairs inside each window
};

/// H(w([-M, M])) / (2M + 1) for M = k, 2k, ..., m_max k, grown one site at a time.
/// value is the minimum over the second half of the trace. For periodic words
/// the reported tail_bound covers boundary, partial-period and truncation
/// effects for every window in that half.
DensityEstimate density_estimate_stream(const HamiltonianSpec& H, const words::Word& w,
                                        std::int64_t stride_k, std::int64_t m_max,
                                        const StreamOptions& opts = {});

/// Pair sums over one residue class per t0 = 1..k, for a fixed period k:
/// direct part t <= J k, equidistribution main term for the rest, and a proved
/// bound on the error of that main term.
struct PeriodTables {
  std::int64_t k = 0;
  std::int64_t J = 0;
  std::vector<double> direct;      // index t0 - 1
  std::vector<double> main_tail;
  std::vector<double> tail_error;
};

/// Exact-to-tolerance densities of periodic words. Built once per (H, horizon);
/// prepare(k) is shared by every word of period k.
class PeriodicDensityEngine {
 public:
  PeriodicDensityEngine(const HamiltonianSpec& H, std::int64_t horizon);

  PeriodTables prepare(std::int64_t k) const { return prepare(k, T_); }
  /// Tables for a shorter horizon, min(horizon, this->horizon()).
  PeriodTables prepare(std::int64_t k, std::int64_t horizon) const;
  DensityEstimate density(const words::PeriodicWord& y, const PeriodTables& tables) const;
  DensityEstimate density(const words::PeriodicWord& y) const {
    return density(y, prepare(y.k()));
  }

  std::int64_t horizon() const { return T_; }
  const HamiltonianSpec& hamiltonian() const { return H_; }

 private:
  HamiltonianSpec H_;
  std::int64_t T_;
  std::vector<double> w_;  // w_[t - 1] = 1_F(t) t^{-alpha}
  double arc_length_;      // 2 phi - 1
};

struct PeriodicOptions {
  std::int64_t min_horizon = std::int64_t{1} << 16;
  std::int64_t max_horizon = std::int64_t{1} << 24;
};

/// Density of a periodic word; the horizon doubles until tail_bound <= tol or
/// max_horizon is reached. The returned tail_bound is proved either way.
DensityEstimate density_periodic_exact(const HamiltonianSpec& H, const words::PeriodicWord& y,
                                       double tol, const PeriodicOptions& opts = {});

}  // namespace sturmlab::hamiltonian
