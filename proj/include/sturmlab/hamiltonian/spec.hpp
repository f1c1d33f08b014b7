#pragma once

#include <utility>
#include <vector>

#include "sturmlab/forbidden/model.hpp"
#include "sturmlab/words/finite_word.hpp"

namespace sturmlab::hamiltonian {

struct PatternEntry {
  words::FiniteWord pattern;
  double delta = 0;
};

/// Signed energy changes delta(p) on a finite pattern set, each |delta| < lambda.
class PatternTable {
 public:
  PatternTable() = default;
  /// Throws std::invalid_argument when some |delta| >= lambda or a pattern is empty.
  PatternTable(std::vector<PatternEntry> entries, double lambda);

  const std::vector<PatternEntry>& entries() const { return entries_; }
  double lambda() const { return lambda_; }
  bool empty() const { return entries_.empty(); }
  double abs_delta_sum() const;
  /// sum |delta(p)| * (|p| - 1)
  double abs_delta_overhang() const;

 private:
  std::vector<PatternEntry> entries_;
  double lambda_ = 0;
};

/// H_alpha: pair_scale / n^alpha per pair of 1's at forbidden distance n,
/// zero_run_energy per occurrence of m consecutive 0's, plus a perturbation.
struct HamiltonianSpec {
  double alpha = 2.0;
  forbidden::ForbiddenModel forbidden;
  double pair_scale = 1.0;
  double zero_run_energy = 1.0;
  PatternTable perturbation;

  /// Validates alpha > 1 (HypothesisError) and nonnegative base energies.
  static HamiltonianSpec make(double alpha, forbidden::ForbiddenModel forbidden,
                              double pair_scale = 1.0, double zero_run_energy = 1.0);

  std::int64_t m() const { return forbidden.zero_run_m(); }
};

/// H + H_P. Entries of `table` are appended to any existing perturbation.
HamiltonianSpec perturb(const HamiltonianSpec& H, const PatternTable& table);

/// 2 pair_scale zeta(alpha) + zero_run_energy m + sum |delta(p)| |p|.
double summability_bound(const HamiltonianSpec& H);

}  // namespace sturmlab::hamiltonian
