#include "sturmlab/hamiltonian/spec.hpp"

#include <cmath>
#include <stdexcept>

#include "sturmlab/errors.hpp"
#include "sturmlab/hamiltonian/zeta.hpp"

namespace sturmlab::hamiltonian {

PatternTable::PatternTable(std::vector<PatternEntry> entries, double lambda)
    : entries_(std::move(entries)), lambda_(lambda) {
  if (!(lambda_ >= 0)) throw std::invalid_argument("perturbation: lambda must be >= 0");
  for (const auto& e : entries_) {
    if (e.pattern.empty()) throw std::invalid_argument("perturbation: empty pattern");
    if (!(std::abs(e.delta) < lambda_)) {
      throw std::invalid_argument("perturbation: |delta(" + e.pattern.to_string() +
                                  ")| must be < lambda");
    }
  }
}

double PatternTable::abs_delta_sum() const {
  double s = 0;
  for (const auto& e : entries_) s += std::abs(e.delta);
  return s;
}

double PatternTable::abs_delta_overhang() const {
  double s = 0;
  for (const auto& e : entries_) s += std::abs(e.delta) * static_cast<double>(e.pattern.size() - 1);
  return s;
}

HamiltonianSpec HamiltonianSpec::make(double alpha, forbidden::ForbiddenModel forbidden,
                                      double pair_scale, double zero_run_energy) {
  if (!(alpha > 1.0)) {
    throw HypothesisError("alpha must exceed 1 (pair energies must be summable), got " +
                          std::to_string(alpha));
  }
  if (!(pair_scale >= 0) || !(zero_run_energy >= 0)) {
    throw std::invalid_argument("base energies must be nonnegative");
  }
  return HamiltonianSpec{alpha, std::move(forbidden), pair_scale, zero_run_energy, {}};
}

HamiltonianSpec perturb(const HamiltonianSpec& H, const PatternTable& table) {
  HamiltonianSpec out = H;
  if (H.perturbation.empty()) {
    out.perturbation = table;
    return out;
  }
  auto entries = H.perturbation.entries();
  entries.insert(entries.end(), table.entries().begin(), table.entries().end());
  out.perturbation = PatternTable(std::move(entries),
                                  std::max(H.perturbation.lambda(), table.lambda()));
  return out;
}

double summability_bound(const HamiltonianSpec& H) {
  if (!(H.alpha > 1.0)) throw HypothesisError("alpha must exceed 1");
  double s = 2.0 * H.pair_scale * riemann_zeta(H.alpha) +
             H.zero_run_energy * static_cast<double>(H.m());
  for (const auto& e : H.perturbation.entries()) {
    s += std::abs(e.delta) * static_cast<double>(e.pattern.size());
  }
  return s;
}

}  // namespace sturmlab::hamiltonian
