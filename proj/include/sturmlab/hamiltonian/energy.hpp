#pragma once

#include <cstdint>
#include <vector>

#include "sturmlab/hamiltonian/spec.hpp"
#include "sturmlab/words/finite_word.hpp"

namespace sturmlab::hamiltonian {

/// Exact integer counts from which H(w) follows for any alpha and scale.
struct WindowCensus {
  std::vector<std::uint64_t> pair_counts;  // [t] = pairs of 1's at distance t in F (0 for t not in F)
  std::uint64_t forbidden_pairs = 0;       // sum of pair_counts
  std::int64_t zero_runs = 0;              // occurrences of 0^m by left endpoint
  std::vector<std::int64_t> pattern_counts;  // aligned with the perturbation entries
};

WindowCensus window_census(const HamiltonianSpec& H, const words::FiniteWord& w);
double energy_from_census(const HamiltonianSpec& H, const WindowCensus& c);

/// H(w): forbidden pairs inside w, zero-run occurrences, perturbation patterns.
double window_energy(const HamiltonianSpec& H, const words::FiniteWord& w);

}  // namespace sturmlab::hamiltonian
