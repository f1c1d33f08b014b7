#include "sturmlab/stability/stability.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>

#include "sturmlab/errors.hpp"
#include "sturmlab/forbidden/model.hpp"
#include "sturmlab/hamiltonian/density.hpp"
#include "sturmlab/hamiltonian/zeta.hpp"
#include "sturmlab/simd/kernels.hpp"
#include "sturmlab/util/parallel.hpp"

namespace sturmlab::stability {

using hamiltonian::HamiltonianSpec;
using words::PeriodicWord;

ScalingFit scaling_fit(const std::vector<std::pair<double, double>>& points, double predicted) {
  if (points.size() < 5) throw std::invalid_argument("scaling_fit: need at least 5 points");
  const double n = static_cast<double>(points.size());
  double sx = 0, sy = 0;
  ScalingFit fit;
  fit.size_lo = points.front().first;
  fit.size_hi = points.front().first;
  for (const auto& [size, dens] : points) {
    if (!(size > 0) || !(dens > 0)) {
      throw std::invalid_argument("scaling_fit: sizes and densities must be positive");
    }
    sx += std::log(size);
    sy += std::log(dens);
    fit.size_lo = std::min(fit.size_lo, size);
    fit.size_hi = std::max(fit.size_hi, size);
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0, sxy = 0, syy = 0;
  for (const auto& [size, dens] : points) {
    const double dx = std::log(size) - mx, dy = std::log(dens) - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (sxx == 0) throw std::invalid_argument("scaling_fit: sizes must not all be equal");
  fit.exponent = sxy / sxx;
  fit.intercept = my - fit.exponent * mx;
  fit.r_squared = syy == 0 ? 1.0 : (sxy * sxy) / (sxx * syy);
  fit.points = points.size();
  fit.predicted_exponent = predicted;
  return fit;
}

namespace {

// Occurrences of p in w starting at each position (0 past the last full fit).
std::vector<std::int64_t> occurrence_prefix(const FiniteWord& w, const FiniteWord& p) {
  const std::size_t n = w.size(), len = p.size();
  std::vector<std::int64_t> pre(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    bool hit = i + len <= n;
    for (std::size_t j = 0; hit && j < len; ++j) hit = w[i + j] == p[j];
    pre[i + 1] = pre[i] + (hit ? 1 : 0);
  }
  return pre;
}

// Min and max over s of n_p(X([sk, (s+1)k])).
struct SegmentRange {
  std::int64_t lo = 0, hi = 0;
};

std::vector<SegmentRange> sturmian_segment_ranges(const Quad& phi, std::int64_t k,
                                                  const std::vector<FiniteWord>& patterns,
                                                  std::int64_t s_range) {
  const words::SturmianWord X(phi, Quad::integer(0, phi.d()));
  const FiniteWord xw = X.window(-s_range * k, (s_range + 1) * k);
  std::vector<SegmentRange> out;
  for (const auto& p : patterns) {
    const auto pre = occurrence_prefix(xw, p);
    const auto len = static_cast<std::int64_t>(p.size());
    SegmentRange r{std::numeric_limits<std::int64_t>::max(), std::numeric_limits<std::int64_t>::min()};
    for (std::int64_t s = -s_range; s <= s_range; ++s) {
      const std::int64_t a = (s + s_range) * k;  // window index of sk
      const std::int64_t last_start = a + k - len + 1;
      const std::int64_t cnt = last_start < a ? 0 : pre[last_start + 1] - pre[a];
      r.lo = std::min(r.lo, cnt);
      r.hi = std::max(r.hi, cnt);
    }
    out.push_back(r);
  }
  return out;
}

CompetitorConstants constants_from_ranges(const FiniteWord& factor,
                                          const std::vector<FiniteWord>& patterns,
                                          const std::vector<SegmentRange>& ranges) {
  const std::size_t k = factor.size();
  // Y([sk, (s+1)k]) = factor[k-1] factor[0..k-1] for every s.
  FiniteWord seg(k + 1);
  seg.set(0, factor[k - 1]);
  for (std::size_t i = 0; i < k; ++i) seg.set(i + 1, factor[i]);
  CompetitorConstants cc;
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    const std::int64_t ny = words::pattern_count(seg, patterns[i]);
    const std::int64_t D = std::max(ranges[i].hi - ny, ny - ranges[i].lo);
    cc.D.push_back(D);
    cc.C = std::max<std::int64_t>(cc.C, 2 * (D + 2 * static_cast<std::int64_t>(patterns[i].size())));
  }
  return cc;
}

void require_periodic_hypotheses(const Quad& phi, double lambda) {
  words::require_rotation_number(phi);
  if (!(phi > Quad::rational(3, 4, phi.d()))) {
    throw HypothesisError("phi must lie in (3/4, 1) so that [1 - phi, phi] is longer than 1/2");
  }
  if (!(lambda >= 0)) throw HypothesisError("lambda must be >= 0");
}

struct KResult {
  StabilityRecord rec;
  std::vector<Exclusion> excl;
  double lambda_star = std::numeric_limits<double>::infinity();
};

}  // namespace

CompetitorConstants competitor_constants(const Quad& phi, const FiniteWord& factor,
                                         const std::vector<FiniteWord>& patterns,
                                         std::int64_t s_range) {
  const auto k = static_cast<std::int64_t>(factor.size());
  if (k < 1) throw std::invalid_argument("competitor_constants: empty factor");
  return constants_from_ranges(factor, patterns, sturmian_segment_ranges(phi, k, patterns, s_range));
}

PeriodicScan stability_scan_periodic(const Quad& phi, double alpha, double lambda,
                                     const std::vector<FiniteWord>& patterns, std::int64_t k_lo,
                                     std::int64_t k_hi, const PeriodicScanOptions& opts) {
  require_periodic_hypotheses(phi, lambda);
  if (k_lo < 1 || k_hi < k_lo) throw std::invalid_argument("stability_scan_periodic: bad k range");
  for (const auto& p : patterns) {
    if (p.empty()) throw std::invalid_argument("stability_scan_periodic: empty pattern");
  }
  const HamiltonianSpec H = HamiltonianSpec::make(alpha, forbidden::ForbiddenModel::from_scan(phi));
  const hamiltonian::PeriodicDensityEngine engine(H, opts.max_horizon);

  PeriodicScan scan;
  scan.alpha = alpha;
  scan.lambda = lambda;
  scan.n_patterns = static_cast<std::int64_t>(patterns.size());
  scan.m = H.m();
  scan.frequency_floor =
      opts.frequency_floor >= 0 ? opts.frequency_floor : (1.0 - phi.to_double()) / 2.0;
  const double n_pat = static_cast<double>(patterns.size());

  const auto per_k = util::parallel_map(
      static_cast<std::size_t>(k_hi - k_lo + 1), opts.threads, [&](std::size_t idx) {
        const std::int64_t k = k_lo + static_cast<std::int64_t>(idx);
        const double kd = static_cast<double>(k);
        auto factors = words::sturmian_factors(phi, k);
        if (opts.samples_per_k > 0 && opts.samples_per_k < static_cast<std::int64_t>(factors.size())) {
          std::vector<words::Factor> picked;
          const auto total = static_cast<std::int64_t>(factors.size());
          for (std::int64_t j = 0; j < opts.samples_per_k; ++j) {
            picked.push_back(factors[static_cast<std::size_t>(j * total / opts.samples_per_k)]);
          }
          factors = std::move(picked);
        }
        KResult out;
        std::vector<const FiniteWord*> in_scope;
        for (const auto& f : factors) {
          const double freq = static_cast<double>(f.word.popcount()) / kd;
          if (freq < scan.frequency_floor) {
            out.excl.push_back({k, f.word.to_string(), freq});
          } else {
            in_scope.push_back(&f.word);
          }
        }
        out.rec.kind = "periodic";
        out.rec.parameter = k;
        out.rec.samples = static_cast<std::int64_t>(in_scope.size());
        out.rec.excluded = static_cast<std::int64_t>(out.excl.size());
        if (in_scope.empty()) return out;

        const auto ranges = sturmian_segment_ranges(phi, k, patterns, opts.s_range);
        std::vector<hamiltonian::DensityEstimate> dens;
        for (std::int64_t T = std::max(opts.min_horizon, k);; T *= 2) {
          const auto tables = engine.prepare(k, T);
          dens.clear();
          bool ok = true;
          for (const FiniteWord* w : in_scope) {
            dens.push_back(engine.density(PeriodicWord(*w, 1), tables));
            ok = ok && dens.back().tail_bound <= opts.density_rel_tol * dens.back().value;
          }
          if (ok || T >= opts.max_horizon) break;
        }
        bool first = true;
        for (std::size_t i = 0; i < in_scope.size(); ++i) {
          const auto cc = constants_from_ranges(*in_scope[i], patterns, ranges);
          const double base = dens[i].value;
          // n m C lambda over the 2mk + 1 sites of [-mk, mk], as m grows.
          const double gain = n_pat * static_cast<double>(cc.C) * lambda / (2.0 * kd);
          const double margin = base - gain;
          if (first || base < out.rec.min_density) out.rec.min_density = base;
          if (first || margin < out.rec.margin) {
            out.rec.base_density = base;
            out.rec.perturbation_gain = gain;
            out.rec.margin = margin;
            out.rec.C = cc.C;
          }
          out.rec.tail_bound = std::max(out.rec.tail_bound, dens[i].tail_bound);
          if (cc.C > 0 && n_pat > 0) {
            out.lambda_star =
                std::min(out.lambda_star, 2.0 * base * kd / (n_pat * static_cast<double>(cc.C)));
          }
          first = false;
        }
        out.rec.pass = out.rec.margin > 0;
        return out;
      });

  std::vector<std::pair<double, double>> pts;
  for (const auto& r : per_k) {
    scan.exclusions.insert(scan.exclusions.end(), r.excl.begin(), r.excl.end());
    if (r.rec.samples == 0) continue;
    scan.records.push_back(r.rec);
    scan.lambda_star = std::min(scan.lambda_star, r.lambda_star);
    if (r.rec.parameter >= opts.fit_k_min && r.rec.min_density > 0) {
      pts.emplace_back(static_cast<double>(r.rec.parameter), r.rec.min_density);
    }
  }
  if (pts.size() >= 5) scan.fit = scaling_fit(pts, 2.0 - 2.0 * alpha);
  if (!scan.records.empty() && scan.records.back().pass) {
    std::int64_t ks = scan.records.back().parameter;
    for (auto it = scan.records.rbegin(); it != scan.records.rend() && it->pass; ++it) ks = it->parameter;
    scan.k_star = ks;
  }
  return scan;
}

words::RotationWord family_word(const Quad& phi_in, std::int64_t n) {
  words::require_rotation_number(phi_in);
  const Quad& phi = phi_in;
  if (n < 1) throw HypothesisError("family_word: n must be >= 1");
  const Quad hi = phi - Quad::rational(1, n, phi.d());
  if (hi.sign() <= 0) throw HypothesisError("family_word: phi - 1/n must be positive");
  const Quad zero = Quad::integer(0, phi.d());
  return words::RotationWord(phi, zero, torus::Arc::make(zero, hi, true, false));
}

std::int64_t family_pair_count(const Quad& phi, std::int64_t n, const Quad& eps) {
  words::require_rotation_number(phi);
  if (n < 1) throw std::invalid_argument("family_pair_count: n must be >= 1");
  const Int D = phi.d();
  const Quad e = eps.is_rational() ? Quad::rational(eps.p(), eps.r(), D) : eps;
  const Quad one = Quad::integer(1, D);
  const torus::Arc by_n = torus::Arc::make(e, one - phi, true, false);
  const torus::Arc by_phi = torus::Arc::make(phi - e, phi, true, false);
  std::int64_t count = 0;
  Quad x = Quad::integer(0, D);
  for (std::int64_t k = 1; k <= n; ++k) {
    x = (x + phi).frac();
    if (torus::in_arc(Quad::rational(k, n, D), by_n) && by_phi.contains(x)) ++count;
  }
  return count;
}

double family_participation(const Quad& phi, std::int64_t n, std::int64_t L) {
  const auto S = family_word(phi, n);
  const forbidden::ForbiddenModel M(phi, 2);
  const auto mask = M.mask(n);
  const FiniteWord w = S.window(0, L + n - 1);
  std::int64_t ones = 0, partners = 0;
  for (std::int64_t a = 0; a < L; ++a) {
    if (!w[static_cast<std::size_t>(a)]) continue;
    ++ones;
    for (std::int64_t t = 1; t <= n; ++t) {
      if (mask[static_cast<std::size_t>(t)] && w[static_cast<std::size_t>(a + t)]) ++partners;
    }
  }
  return ones == 0 ? 0.0 : static_cast<double>(partners) / static_cast<double>(ones);
}

std::vector<std::int64_t> family_grid(std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> out;
  for (std::int64_t n = lo; n <= hi; n += (n <= 100 ? 1 : (n + 19) / 20)) out.push_back(n);
  if (!out.empty() && out.back() != hi) out.push_back(hi);
  return out;
}

namespace {

StabilityRecord family_point(const Quad& phi, double alpha, double lambda, std::int64_t n,
                             const std::vector<std::int64_t>& ts, const std::vector<double>& wts,
                             const FamilyScanOptions& opts, std::int64_t m) {
  const auto S = family_word(phi, n);
  const auto& kern = simd::kernels();
  const double ell = 1.0 - phi.to_double() + 1.0 / static_cast<double>(n);
  std::vector<std::uint64_t> bits;
  std::int64_t have = 0;
  auto extend_to = [&](std::int64_t L) {
    constexpr std::int64_t chunk = std::int64_t{1} << 16;
    while (have < L) {
      const FiniteWord w = S.window(have, have + chunk - 1);
      bits.insert(bits.end(), w.bits().begin(), w.bits().end());
      have += chunk;
    }
  };
  auto pair_density = [&](std::int64_t L) {
    double sum = 0;
    for (std::size_t i = 0; i < ts.size(); ++i) {
      const std::int64_t t = ts[i];
      if (t >= L) break;
      const auto cnt = kern.and_popcount_shifted(bits.data(), static_cast<std::size_t>(L),
                                                 static_cast<std::size_t>(t));
      sum += wts[i] * static_cast<double>(cnt) / static_cast<double>(L - t);
    }
    return sum;
  };

  StabilityRecord rec;
  rec.kind = "family";
  rec.parameter = n;
  std::int64_t L = std::max<std::int64_t>(opts.min_window, std::int64_t{1} << 16);
  L = (L + 63) / 64 * 64;
  extend_to(L);
  double prev = pair_density(L);
  rec.converged = false;
  while (L < opts.max_window) {
    L *= 2;
    extend_to(L);
    const double cur = pair_density(L);
    const bool done = std::abs(cur - prev) <= opts.rel_change * std::abs(cur);
    prev = cur;
    if (done) {
      rec.converged = true;
      break;
    }
  }
  rec.window = L;
  std::uint64_t ones = 0;
  std::int64_t zero_runs = 0, run = 0;
  for (std::int64_t i = 0; i < L; ++i) {
    const bool one = (bits[static_cast<std::size_t>(i >> 6)] >> (i & 63)) & 1u;
    ones += one;
    run = one ? 0 : run + 1;
    if (run >= m) ++zero_runs;
  }
  rec.ones_frequency = static_cast<double>(ones) / static_cast<double>(L);
  const double zr = static_cast<double>(zero_runs) / static_cast<double>(L - m + 1);
  rec.base_density = prev + zr;
  rec.min_density = rec.base_density;
  rec.tail_bound = std::min(ell, rec.ones_frequency) * hamiltonian::zeta_tail(alpha, double(opts.horizon + 1));
  rec.perturbation_gain = lambda / static_cast<double>(n);
  rec.margin = rec.base_density - rec.perturbation_gain;
  rec.pass = rec.margin > 0;
  return rec;
}

}  // namespace

FamilyScan stability_scan_family(const Quad& phi, double alpha, double lambda,
                                 const std::vector<std::int64_t>& ns, const FamilyScanOptions& opts) {
  words::require_rotation_number(phi);
  if (!(phi > Quad::rational(1, 2, phi.d()))) throw HypothesisError("phi must lie in (1/2, 1)");
  if (!(lambda >= 0)) throw HypothesisError("lambda must be >= 0");
  if (ns.empty()) throw std::invalid_argument("stability_scan_family: empty n list");
  const HamiltonianSpec H = HamiltonianSpec::make(alpha, forbidden::ForbiddenModel::from_scan(phi));
  for (std::int64_t n : ns) (void)family_word(phi, n);

  // Pairs of 1's at distance t need ||t phi|| < |complement of the zero arc|;
  // the double filter keeps a superset, the counts themselves are exact.
  const auto mask = H.forbidden.mask(opts.horizon);
  const double phid = phi.to_double();
  std::int64_t n_min = *std::min_element(ns.begin(), ns.end());
  const double ell_max = 1.0 - phid + 1.0 / static_cast<double>(n_min);
  std::vector<std::int64_t> ts_all;
  for (std::int64_t t = 1; t <= opts.horizon; ++t) {
    if (!mask[static_cast<std::size_t>(t)]) continue;
    const double f = std::fmod(static_cast<double>(t) * phid, 1.0);
    if (std::min(f, 1.0 - f) < ell_max + 1e-9) ts_all.push_back(t);
  }

  FamilyScan scan;
  scan.alpha = alpha;
  scan.lambda = lambda;
  scan.records = util::parallel_map(ns.size(), opts.threads, [&](std::size_t i) {
    const std::int64_t n = ns[i];
    const double ell = 1.0 - phid + 1.0 / static_cast<double>(n);
    std::vector<std::int64_t> ts;
    std::vector<double> wts;
    for (std::int64_t t : ts_all) {
      const double f = std::fmod(static_cast<double>(t) * phid, 1.0);
      if (std::min(f, 1.0 - f) < ell + 1e-9) {
        ts.push_back(t);
        wts.push_back(H.pair_scale * std::pow(static_cast<double>(t), -alpha));
      }
    }
    return family_point(phi, alpha, lambda, n, ts, wts, opts, H.m());
  });
  std::sort(scan.records.begin(), scan.records.end(),
            [](const auto& a, const auto& b) { return a.parameter < b.parameter; });

  std::vector<std::pair<double, double>> pts;
  bool first = true;
  for (const auto& r : scan.records) {
    const double nd = static_cast<double>(r.parameter);
    scan.lambda_threshold = first ? r.base_density * nd : std::min(scan.lambda_threshold, r.base_density * nd);
    first = false;
    if (r.parameter >= opts.fit_n_min && r.base_density > 0) {
      pts.emplace_back(nd, r.base_density);
      const double c = r.base_density * std::pow(nd, alpha - 1.0);
      scan.c1 = pts.size() == 1 ? c : std::min(scan.c1, c);
    }
  }
  if (pts.size() >= 5) scan.fit = scaling_fit(pts, 1.0 - alpha);
  if (scan.records.back().pass) {
    std::int64_t ns_ = scan.records.back().parameter;
    for (auto it = scan.records.rbegin(); it != scan.records.rend() && it->pass; ++it) ns_ = it->parameter;
    scan.n_star = ns_;
  }
  return scan;
}

}  // namespace sturmlab::stability
