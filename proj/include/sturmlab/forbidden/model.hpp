#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sturmlab/torus/arc.hpp"
#include "sturmlab/torus/field.hpp"
#include "sturmlab/words/finite_word.hpp"

namespace sturmlab::forbidden {

using torus::Quad;

/// Forbidden distances F = {k >= 1 : {k phi} in [1 - phi, phi]} together with
/// the zero-run bound m, for phi in (1/2, 1).
class ForbiddenModel {
 public:
  ForbiddenModel(Quad phi, std::int64_t zero_run_m);
  /// m from zero_run_bound over scan_N symbols.
  static ForbiddenModel from_scan(const Quad& phi, std::int64_t scan_N = 100000);

  const Quad& phi() const { return phi_; }
  std::int64_t zero_run_m() const { return m_; }
  const torus::Arc& arc() const { return arc_; }

  bool is_forbidden(std::int64_t k) const;
  /// mask[t] = 1 iff t in F, for t = 0..t_max (mask[0] = 0).
  std::vector<std::uint8_t> mask(std::int64_t t_max) const;

 private:
  Quad phi_;
  std::int64_t m_;
  torus::Arc arc_;
  torus::FieldFrame frame_;
  torus::FieldFrame::Point phi_pt_, lo_pt_, hi_pt_;
};

bool is_forbidden_distance(const ForbiddenModel& M, std::int64_t k);
std::vector<std::int64_t> forbidden_set(const ForbiddenModel& M, std::int64_t k_max);

struct ZeroRunScan {
  std::int64_t m = 0;
  std::int64_t max_run = 0;
  std::vector<std::int64_t> gaps;       // distinct distances between consecutive 1's
  bool stable = true;                   // same gaps and max run on the first half
  bool three_distance_ok = true;        // at most 3 gap values
  std::string warning;
};

/// m = 1 + longest run of 0's in X([0, scan_N - 1]) for x0 = 0.
ZeroRunScan zero_run_bound(const Quad& phi, std::int64_t scan_N);
ZeroRunScan zero_run_bound(const ForbiddenModel& M, std::int64_t scan_N);

struct Violation {
  std::string kind;           // "pair" or "zero_run"
  std::int64_t position = 0;  // absolute index of the left end
  std::int64_t distance = 0;  // pair distance or run length
};

struct Witness {
  std::int64_t k = 0;
  std::int64_t position = 0;  // n with X(n) = X(n + k) = 1
};

struct CharacterizationReport {
  std::int64_t m = 0;
  std::int64_t word_N = 0;
  std::int64_t k_max = 0;
  std::int64_t violation_count = 0;
  std::vector<Violation> violations;  // the first few
  std::vector<std::int64_t> unrealized;
  std::vector<Witness> witnesses;
  bool ok() const { return violation_count == 0; }
};

/// Checks the Sturmian word X (x0 = 0) over [0, word_N]: no pair of 1's at a
/// forbidden distance <= k_max, no run of m zeros, and every allowed k <= k_max
/// realized by some pair.
CharacterizationReport verify_characterization(const ForbiddenModel& M, std::int64_t word_N,
                                               std::int64_t k_max);

/// The same checks on an arbitrary word.
CharacterizationReport verify_word(const ForbiddenModel& M, const words::FiniteWord& w,
                                   std::int64_t k_max);

}  // namespace sturmlab::forbidden
