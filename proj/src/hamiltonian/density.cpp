#include "sturmlab/hamiltonian/density.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "sturmlab/hamiltonian/zeta.hpp"
#include "sturmlab/simd/kernels.hpp"
#include "sturmlab/torus/continued_fraction.hpp"
#include "sturmlab/words/stats.hpp"

namespace sturmlab::hamiltonian {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

words::FiniteWord zero_run_pattern(std::int64_t m) {
  return words::FiniteWord(static_cast<std::size_t>(m));
}

}  // namespace

DensityEstimate density_estimate_stream(const HamiltonianSpec& H, const words::Word& w,
                                        std::int64_t stride_k, std::int64_t m_max,
                                        const StreamOptions& opts) {
  if (stride_k < 1 || m_max < 1) throw std::invalid_argument("stream: stride_k and m_max must be >= 1");
  const std::int64_t Mmax = stride_k * m_max;
  const words::FiniteWord fw = w.window(-Mmax, Mmax);
  const std::size_t N = fw.size();
  const std::size_t C = static_cast<std::size_t>(Mmax);

  std::vector<std::uint8_t> b(N), rb(N);
  std::vector<std::int64_t> ones(N + 1, 0);
  for (std::size_t i = 0; i < N; ++i) {
    b[i] = static_cast<std::uint8_t>(fw[i]);
    rb[N - 1 - i] = b[i];
    ones[i + 1] = ones[i] + b[i];
  }

  const std::int64_t T = opts.horizon > 0 ? std::min<std::int64_t>(opts.horizon, static_cast<std::int64_t>(N) - 1)
                                          : static_cast<std::int64_t>(N) - 1;
  std::vector<double> wt(static_cast<std::size_t>(std::max<std::int64_t>(T, 0)), 0.0);
  if (T > 0) {
    const auto mask = H.forbidden.mask(T);
    for (std::int64_t t = 1; t <= T; ++t) {
      if (mask[static_cast<std::size_t>(t)]) {
        wt[static_cast<std::size_t>(t - 1)] = H.pair_scale * std::pow(static_cast<double>(t), -H.alpha);
      }
    }
  }

  const auto& kern = simd::kernels();
  const std::size_t m = static_cast<std::size_t>(H.m());
  const auto& entries = H.perturbation.entries();
  auto matches = [&](std::size_t a, const words::FiniteWord& p) {
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (b[a + j] != p[j]) return false;
    }
    return true;
  };

  double E = 0;
  std::size_t lo = C, hi = C;  // current window [lo, hi] after the first site
  auto add_right = [&](std::size_t S) {
    if (b[S] && S > lo) {
      const std::size_t n = std::min<std::size_t>(S - lo, static_cast<std::size_t>(T));
      E += kern.masked_dot(wt.data(), rb.data() + (N - S), n);
    }
    if (S + 1 >= lo + m && ones[S + 1] - ones[S + 1 - m] == 0) E += H.zero_run_energy;
    for (const auto& e : entries) {
      const std::size_t len = e.pattern.size();
      if (S + 1 >= lo + len && matches(S + 1 - len, e.pattern)) E += e.delta;
    }
  };
  auto add_left = [&](std::size_t S) {
    if (b[S] && hi > S) {
      const std::size_t n = std::min<std::size_t>(hi - S, static_cast<std::size_t>(T));
      E += kern.masked_dot(wt.data(), b.data() + S + 1, n);
    }
    if (S + m <= hi + 1 && ones[S + m] - ones[S] == 0) E += H.zero_run_energy;
    for (const auto& e : entries) {
      const std::size_t len = e.pattern.size();
      if (S + len <= hi + 1 && matches(S, e.pattern)) E += e.delta;
    }
  };

  add_right(C);
  DensityEstimate est;
  est.horizon = opts.horizon > 0 ? T : 0;
  for (std::int64_t M = 1; M <= Mmax; ++M) {
    hi = C + static_cast<std::size_t>(M);
    add_right(hi);
    lo = C - static_cast<std::size_t>(M);
    add_left(lo);
    if (M % stride_k == 0) {
      const std::int64_t L = 2 * M + 1;
      est.window_sizes.push_back(L);
      est.per_window_energy.push_back(E);
      est.per_window.push_back(E / static_cast<double>(L));
    }
  }

  const std::size_t first = est.per_window.size() / 2;
  est.value = *std::min_element(est.per_window.begin() + static_cast<std::ptrdiff_t>(first),
                                est.per_window.end());

  const bool truncated = opts.horizon > 0 && T < static_cast<std::int64_t>(N) - 1;
  const double horizon_term =
      truncated ? H.pair_scale * std::pow(static_cast<double>(T), 1.0 - H.alpha) / (H.alpha - 1.0) : 0.0;

  const auto period = w.period();
  if (!period) {
    est.is_exact = false;
    est.tail_bound = horizon_term;
    return est;
  }
  // Boundary deficit: pair_scale * sum_t t^-alpha min(t, L), plus occurrences
  // overhanging the right edge; partial period: (L mod p) sites off average.
  const double zeta_a = riemann_zeta(H.alpha);
  const double per_site =
      H.pair_scale * zeta_a + H.zero_run_energy + 2.0 * H.perturbation.abs_delta_sum();
  const double overhang = H.zero_run_energy * static_cast<double>(H.m() - 1) +
                          H.perturbation.abs_delta_overhang();
  double bound = 0;
  double partial = 0;  // sum_{t <= L} t^{1 - alpha}
  std::int64_t t_done = 0;
  for (std::size_t i = first; i < est.window_sizes.size(); ++i) {
    const std::int64_t L = est.window_sizes[i];
    for (; t_done < L; ++t_done) partial += std::pow(static_cast<double>(t_done + 1), 1.0 - H.alpha);
    const double R2 = H.pair_scale * (partial + static_cast<double>(L) * zeta_tail(H.alpha, static_cast<double>(L + 1))) + overhang;
    const double R1 = static_cast<double>(L % *period) * per_site;
    bound = std::max(bound, (R1 + R2) / static_cast<double>(L));
  }
  est.is_exact = true;
  est.tail_bound = bound + horizon_term;
  return est;
}

PeriodicDensityEngine::PeriodicDensityEngine(const HamiltonianSpec& H, std::int64_t horizon)
    : H_(H), T_(horizon) {
  if (T_ < 1) throw std::invalid_argument("periodic density: horizon must be >= 1");
  const auto mask = H_.forbidden.mask(T_);
  w_.assign(static_cast<std::size_t>(T_), 0.0);
  for (std::int64_t t = 1; t <= T_; ++t) {
    if (mask[static_cast<std::size_t>(t)]) {
      w_[static_cast<std::size_t>(t - 1)] = std::pow(static_cast<double>(t), -H_.alpha);
    }
  }
  arc_length_ = (H_.forbidden.phi() * Int(2) - torus::Quad::integer(1, H_.forbidden.phi().d())).to_double();
}

PeriodTables PeriodicDensityEngine::prepare(std::int64_t k, std::int64_t horizon) const {
  if (k < 1) throw std::invalid_argument("periodic density: k must be >= 1");
  if (horizon < k) throw std::invalid_argument("periodic density: horizon must be >= k");
  PeriodTables tab;
  tab.k = k;
  tab.J = std::min(horizon, T_) / k;
  const std::size_t K = static_cast<std::size_t>(k);
  tab.direct.assign(K, 0.0);
  simd::kernels().accumulate_blocks(w_.data(), static_cast<std::size_t>(tab.J), K, tab.direct.data());

  // Convergents of beta = {k phi}: indicator sums of the rotation by beta over
  // N consecutive steps deviate from N |A| by at most 2 sum_{q_i <= N} a_{i+1}.
  const torus::Quad beta = (H_.forbidden.phi() * Int(k)).frac();
  const auto cf = torus::cf_expand(beta, 400);
  std::vector<double> a_next, q;  // a_{i+1}, q_i
  double a_max = 0;
  {
    double q_prev = 0, q_cur = 1;
    const double cap = 1e15;
    for (std::size_t i = 0; q_cur <= cap; ++i) {
      const double a = cf.quotient(i + 1).convert_to<double>();
      a_next.push_back(a);
      q.push_back(q_cur);
      a_max = std::max(a_max, a);
      const double q_new = a * q_cur + q_prev;
      q_prev = q_cur;
      q_cur = q_new;
    }
    q.push_back(q_cur);  // first denominator beyond the cap
  }
  const double kd = static_cast<double>(k);
  const double alpha = H_.alpha;
  const double Jd = static_cast<double>(tab.J);
  tab.main_tail.assign(K, 0.0);
  tab.tail_error.assign(K, 0.0);
  for (std::size_t i = 0; i < K; ++i) {
    const double t0 = static_cast<double>(i + 1);
    auto f = [&](double j) { return std::pow(t0 + j * kd, -alpha); };
    tab.main_tail[i] = arc_length_ * std::pow(kd, -alpha) * hurwitz_zeta(alpha, Jd + t0 / kd);
    double err = 2.0 * f(Jd);
    for (std::size_t mi = 0; mi + 1 < q.size(); ++mi) err += 2.0 * a_next[mi] * f(Jd + q[mi] - 1.0);
    const double qM = q.back();
    err += 4.0 * a_max * std::pow((qM - 1.0) * kd, -alpha) / (1.0 - std::pow(2.0, -alpha));
    tab.tail_error[i] = err;
  }
  return tab;
}

DensityEstimate PeriodicDensityEngine::density(const words::PeriodicWord& y,
                                               const PeriodTables& tab) const {
  const std::int64_t k = y.k();
  if (k != tab.k) throw std::invalid_argument("periodic density: tables prepared for another period");
  const auto& period = y.period_word();
  const auto c = words::cyclic_autocorrelation(period);
  const double kd = static_cast<double>(k);

  double pair = 0, pair_err = 0, abs_sum = 0;
  for (std::int64_t t0 = 1; t0 <= k; ++t0) {
    const double cnt = static_cast<double>(c[static_cast<std::size_t>(t0 % k)]);
    if (cnt == 0) continue;
    const std::size_t i = static_cast<std::size_t>(t0 - 1);
    pair += cnt * (tab.direct[i] + tab.main_tail[i]);
    pair_err += cnt * tab.tail_error[i];
  }
  pair *= H_.pair_scale / kd;
  pair_err *= H_.pair_scale / kd;
  abs_sum += pair;

  const double zr = H_.zero_run_energy *
                    static_cast<double>(words::cyclic_pattern_count(period, zero_run_pattern(H_.m()))) / kd;
  abs_sum += zr;
  double pert = 0;
  for (const auto& e : H_.perturbation.entries()) {
    const double v = e.delta * static_cast<double>(words::cyclic_pattern_count(period, e.pattern)) / kd;
    pert += v;
    abs_sum += std::abs(v);
  }

  DensityEstimate est;
  est.value = pair + zr + pert;
  est.horizon = tab.J * k;
  est.window_sizes.push_back(est.horizon);
  est.per_window.push_back(est.value);
  est.per_window_energy.push_back(est.value * kd);
  const double rounding = static_cast<double>(tab.J + k + 16) * 2.0 * kEps * abs_sum;
  est.tail_bound = pair_err + rounding;
  est.is_exact = true;
  return est;
}

DensityEstimate density_periodic_exact(const HamiltonianSpec& H, const words::PeriodicWord& y,
                                       double tol, const PeriodicOptions& opts) {
  if (!(tol > 0)) throw std::invalid_argument("density_periodic_exact: tol must be > 0");
  std::int64_t T = std::max<std::int64_t>(opts.min_horizon, y.k());
  for (;;) {
    const PeriodicDensityEngine engine(H, T);
    DensityEstimate est = engine.density(y);
    if (est.tail_bound <= tol || T >= opts.max_horizon) return est;
    T *= 2;
  }
}

}  // namespace sturmlab::hamiltonian
