#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sturmlab/hamiltonian/spec.hpp"
#include "sturmlab/words/rotation.hpp"
#include "sturmlab/words/stats.hpp"

namespace sturmlab::stability {

using torus::Quad;
using words::FiniteWord;

/// Least-squares line through (log size, log density).
struct ScalingFit {
  double exponent = 0;
  double intercept = 0;
  double r_squared = 0;
  double size_lo = 0;
  double size_hi = 0;
  std::size_t points = 0;
  double predicted_exponent = 0;
  double deviation() const { return exponent - predicted_exponent; }
};

/// Throws std::invalid_argument for fewer than 5 points or a nonpositive value.
ScalingFit scaling_fit(const std::vector<std::pair<double, double>>& points, double predicted);

struct StabilityRecord {
  std::string kind;  // "periodic" or "family"
  std::int64_t parameter = 0;  // k or n
  double base_density = 0;     // periodic: of the competitor with the least margin
  double min_density = 0;      // periodic: least base density over all competitors
  double perturbation_gain = 0;  // periodic: n C lambda / (2k); family: lambda / n
  double margin = 0;
  bool pass = false;
  double tail_bound = 0;
  std::int64_t C = 0;              // periodic: the counting constant at the worst competitor
  std::int64_t samples = 0;        // periodic: competitors evaluated
  std::int64_t excluded = 0;       // periodic: competitors below the frequency floor
  std::int64_t window = 0;         // family: final window length
  bool converged = true;           // family: relative change criterion met
  double ones_frequency = 0;       // family: measured frequency of 1's
};

/// Per-pattern deviation constants of a period-k competitor against X (x0 = 0)
/// on the closed segments [sk, (s+1)k], |s| <= s_range.
struct CompetitorConstants {
  std::vector<std::int64_t> D;  // aligned with the pattern list
  std::int64_t C = 0;           // 2 max_p (D_p + 2|p|)
};

/// The competitor has period `factor` with Y(1..k) = factor.
CompetitorConstants competitor_constants(const Quad& phi, const FiniteWord& factor,
                                         const std::vector<FiniteWord>& patterns,
                                         std::int64_t s_range);

struct Exclusion {
  std::int64_t k = 0;
  std::string factor;
  double ones_frequency = 0;
};

struct PeriodicScanOptions {
  std::int64_t samples_per_k = 0;  // 0: all k + 1 factors
  double frequency_floor = -1;     // < 0: (1 - phi) / 2
  double density_rel_tol = 1e-6;
  std::int64_t s_range = 64;
  std::int64_t fit_k_min = 20;
  std::int64_t min_horizon = std::int64_t{1} << 14;
  std::int64_t max_horizon = std::int64_t{1} << 22;
  unsigned threads = 1;
};

struct PeriodicScan {
  double alpha = 0;
  double lambda = 0;
  std::int64_t n_patterns = 0;
  std::int64_t m = 0;
  double frequency_floor = 0;
  std::vector<StabilityRecord> records;  // one per k, ascending
  std::vector<Exclusion> exclusions;
  std::optional<ScalingFit> fit;         // min density vs k over k >= fit_k_min
  std::optional<std::int64_t> k_star;    // least k with every later k passing
  double lambda_star = std::numeric_limits<double>::infinity();  // margins stay positive for lambda < lambda_star
};

/// Periodically Sturmian competitors of every period k in [k_lo, k_hi] against
/// the Sturmian ground state under the worst (lambda, patterns)-perturbation.
/// Throws HypothesisError unless 3/4 < phi < 1 and alpha > 1.
PeriodicScan stability_scan_periodic(const Quad& phi, double alpha, double lambda,
                                     const std::vector<FiniteWord>& patterns, std::int64_t k_lo,
                                     std::int64_t k_hi, const PeriodicScanOptions& opts = {});

/// S_n: 0 where {j phi} lies in [0, phi - 1/n), 1 elsewhere.
words::RotationWord family_word(const Quad& phi, std::int64_t n);

struct FamilyScanOptions {
  std::int64_t horizon = std::int64_t{1} << 16;  // pair distances t <= horizon
  std::int64_t min_window = std::int64_t{1} << 16;
  std::int64_t max_window = std::int64_t{1} << 25;
  double rel_change = 1e-4;
  std::int64_t fit_n_min = 20;
  unsigned threads = 1;
};

struct FamilyScan {
  double alpha = 0;
  double lambda = 0;
  std::vector<StabilityRecord> records;  // ascending n
  std::optional<ScalingFit> fit;         // pair density vs n over n >= fit_n_min
  std::optional<std::int64_t> n_star;
  double c1 = 0;  // min over fitted n of density * n^(alpha - 1)
  double lambda_threshold = 0;  // min over n of density * n
};

/// Pair-energy density of S_n on windows [0, L) with L doubling until the
/// relative change drops below rel_change; reward lambda / n from delta("1") = -lambda.
FamilyScan stability_scan_family(const Quad& phi, double alpha, double lambda,
                                 const std::vector<std::int64_t>& ns,
                                 const FamilyScanOptions& opts = {});

/// #{k in [1, n] : {k/n} in [eps, 1 - phi), {k phi} in [phi - eps, phi)}, exactly.
std::int64_t family_pair_count(const Quad& phi, std::int64_t n, const Quad& eps);

/// Mean number of partners at forbidden distances <= n per 1 of S_n over [0, L).
double family_participation(const Quad& phi, std::int64_t n, std::int64_t L);

/// Every integer in [lo, min(hi, 100)], then steps of ceil(n / 20) up to hi.
std::vector<std::int64_t> family_grid(std::int64_t lo, std::int64_t hi);

}  // namespace sturmlab::stability
