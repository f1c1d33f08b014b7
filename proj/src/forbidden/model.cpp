#include "sturmlab/forbidden/model.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "sturmlab/errors.hpp"
#include "sturmlab/simd/kernels.hpp"
#include "sturmlab/words/rotation.hpp"

namespace sturmlab::forbidden {

using torus::FieldFrame;

namespace {

constexpr std::size_t kMaxListedViolations = 64;

void require_phi(const Quad& phi) {
  words::require_rotation_number(phi);
  if (phi <= Quad::rational(1, 2, phi.d())) {
    throw HypothesisError("phi must exceed 1/2 (swap the roles of 0 and 1 otherwise), got " +
                          phi.to_string());
  }
}

}  // namespace

ForbiddenModel::ForbiddenModel(Quad phi, std::int64_t zero_run_m)
    : phi_(std::move(phi)), m_(zero_run_m) {
  require_phi(phi_);
  if (m_ < 2) throw std::invalid_argument("zero-run bound m must be >= 2");
  arc_ = torus::Arc::closed(Quad::integer(1, phi_.d()) - phi_, phi_);
  frame_ = FieldFrame::common(phi_, phi_);
  phi_pt_ = frame_.embed(phi_);
  lo_pt_ = frame_.embed(arc_.lo);
  hi_pt_ = frame_.embed(arc_.hi);
}

ForbiddenModel ForbiddenModel::from_scan(const Quad& phi, std::int64_t scan_N) {
  return ForbiddenModel(phi, zero_run_bound(phi, scan_N).m);
}

bool ForbiddenModel::is_forbidden(std::int64_t k) const {
  if (k < 1) throw std::invalid_argument("forbidden distance: k must be >= 1");
  const auto x = frame_.frac(frame_.scale(phi_pt_, k));
  return frame_.cmp(x, lo_pt_) >= 0 && frame_.cmp(x, hi_pt_) <= 0;
}

std::vector<std::uint8_t> ForbiddenModel::mask(std::int64_t t_max) const {
  std::vector<std::uint8_t> out(static_cast<std::size_t>(std::max<std::int64_t>(t_max, 0) + 1), 0);
  torus::OrbitCursor orbit(frame_, phi_pt_, phi_pt_);
  for (std::int64_t t = 1; t <= t_max; ++t, orbit.advance()) {
    const auto& x = orbit.point();
    out[static_cast<std::size_t>(t)] = frame_.cmp(x, lo_pt_) >= 0 && frame_.cmp(x, hi_pt_) <= 0;
  }
  return out;
}

bool is_forbidden_distance(const ForbiddenModel& M, std::int64_t k) { return M.is_forbidden(k); }

std::vector<std::int64_t> forbidden_set(const ForbiddenModel& M, std::int64_t k_max) {
  std::vector<std::int64_t> out;
  const auto mask = M.mask(k_max);
  for (std::int64_t k = 1; k <= k_max; ++k) {
    if (mask[static_cast<std::size_t>(k)]) out.push_back(k);
  }
  return out;
}

namespace {

struct RunGapSummary {
  std::int64_t max_run = 0;
  std::set<std::int64_t> gaps;
};

RunGapSummary summarize(const words::FiniteWord& w, std::size_t len) {
  RunGapSummary s;
  std::int64_t run = 0;
  std::int64_t last_one = -1;
  for (std::size_t i = 0; i < len; ++i) {
    if (w[i]) {
      if (last_one >= 0) s.gaps.insert(static_cast<std::int64_t>(i) - last_one);
      last_one = static_cast<std::int64_t>(i);
      run = 0;
    } else {
      s.max_run = std::max(s.max_run, ++run);
    }
  }
  return s;
}

}  // namespace

ZeroRunScan zero_run_bound(const Quad& phi, std::int64_t scan_N) {
  require_phi(phi);
  if (scan_N < 2) throw std::invalid_argument("zero_run_bound: scan_N must be >= 2");
  const words::SturmianWord x(phi, Quad::integer(0, phi.d()));
  const words::FiniteWord w = x.window(0, scan_N - 1);
  const RunGapSummary full = summarize(w, w.size());
  const RunGapSummary half = summarize(w, w.size() / 2);

  ZeroRunScan out;
  out.max_run = full.max_run;
  out.m = full.max_run + 1;
  out.gaps.assign(full.gaps.begin(), full.gaps.end());
  out.stable = full.gaps == half.gaps && full.max_run == half.max_run;
  out.three_distance_ok = full.gaps.size() <= 3;
  if (!out.stable) out.warning = "gap set or longest zero run changed between scan_N/2 and scan_N";
  if (!out.three_distance_ok) {
    if (!out.warning.empty()) out.warning += "; ";
    out.warning += "more than three gap lengths observed";
  }
  return out;
}

ZeroRunScan zero_run_bound(const ForbiddenModel& M, std::int64_t scan_N) {
  return zero_run_bound(M.phi(), scan_N);
}

CharacterizationReport verify_word(const ForbiddenModel& M, const words::FiniteWord& w,
                                   std::int64_t k_max) {
  CharacterizationReport rep;
  rep.m = M.zero_run_m();
  rep.word_N = static_cast<std::int64_t>(w.size()) - 1;
  rep.k_max = k_max;
  const auto mask = M.mask(k_max);
  const auto& kern = simd::kernels();
  const std::size_t n = w.size();

  for (std::int64_t k = 1; k <= k_max; ++k) {
    const std::size_t sk = static_cast<std::size_t>(k);
    const std::uint64_t pairs = kern.and_popcount_shifted(w.bits().data(), n, sk);
    const bool forbidden = mask[sk] != 0;
    if (pairs == 0) {
      if (!forbidden) rep.unrealized.push_back(k);
      continue;
    }
    if (forbidden) {
      rep.violation_count += static_cast<std::int64_t>(pairs);
      for (std::size_t i = 0; i + sk < n && rep.violations.size() < kMaxListedViolations; ++i) {
        if (w[i] && w[i + sk]) {
          rep.violations.push_back({"pair", w.origin() + static_cast<std::int64_t>(i), k});
        }
      }
      continue;
    }
    for (std::size_t i = 0; i + sk < n; ++i) {
      if (w[i] && w[i + sk]) {
        rep.witnesses.push_back({k, w.origin() + static_cast<std::int64_t>(i)});
        break;
      }
    }
  }

  std::int64_t run = 0;
  for (std::size_t i = 0; i < n; ++i) {
    run = w[i] ? 0 : run + 1;
    if (run >= rep.m) {
      ++rep.violation_count;
      if (rep.violations.size() < kMaxListedViolations) {
        rep.violations.push_back(
            {"zero_run", w.origin() + static_cast<std::int64_t>(i) - rep.m + 1, rep.m});
      }
    }
  }
  return rep;
}

CharacterizationReport verify_characterization(const ForbiddenModel& M, std::int64_t word_N,
                                               std::int64_t k_max) {
  const words::SturmianWord x(M.phi(), Quad::integer(0, M.phi().d()));
  CharacterizationReport rep = verify_word(M, x.window(0, word_N), k_max);
  rep.word_N = word_N;
  return rep;
}

}  // namespace sturmlab::forbidden
