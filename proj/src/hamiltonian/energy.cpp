#include "sturmlab/hamiltonian/energy.hpp"

#include <cmath>

#include "sturmlab/simd/kernels.hpp"
#include "sturmlab/words/stats.hpp"

namespace sturmlab::hamiltonian {

WindowCensus window_census(const HamiltonianSpec& H, const words::FiniteWord& w) {
  WindowCensus c;
  const std::size_t n = w.size();
  c.pair_counts.assign(n == 0 ? 1 : n, 0);
  if (n > 1 && w.popcount() > 1) {
    const auto mask = H.forbidden.mask(static_cast<std::int64_t>(n - 1));
    const auto& kern = simd::kernels();
    for (std::size_t t = 1; t < n; ++t) {
      if (!mask[t]) continue;
      c.pair_counts[t] = kern.and_popcount_shifted(w.bits().data(), n, t);
      c.forbidden_pairs += c.pair_counts[t];
    }
  }
  const std::int64_t m = H.m();
  std::int64_t run = 0;
  for (std::size_t i = 0; i < n; ++i) {
    run = w[i] ? 0 : run + 1;
    if (run >= m) ++c.zero_runs;
  }
  for (const auto& e : H.perturbation.entries()) c.pattern_counts.push_back(words::pattern_count(w, e.pattern));
  return c;
}

double energy_from_census(const HamiltonianSpec& H, const WindowCensus& c) {
  double pairs = 0;
  for (std::size_t t = 1; t < c.pair_counts.size(); ++t) {
    if (c.pair_counts[t] != 0) {
      pairs += static_cast<double>(c.pair_counts[t]) * std::pow(static_cast<double>(t), -H.alpha);
    }
  }
  double e = H.pair_scale * pairs + H.zero_run_energy * static_cast<double>(c.zero_runs);
  const auto& entries = H.perturbation.entries();
  for (std::size_t i = 0; i < entries.size(); ++i) {
    e += entries[i].delta * static_cast<double>(c.pattern_counts[i]);
  }
  return e;
}

double window_energy(const HamiltonianSpec& H, const words::FiniteWord& w) {
  return energy_from_census(H, window_census(H, w));
}

}  // namespace sturmlab::hamiltonian
