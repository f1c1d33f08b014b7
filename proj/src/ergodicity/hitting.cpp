#include "sturmlab/ergodicity/hitting.hpp"

#include <algorithm>
#include <stdexcept>

#include "sturmlab/errors.hpp"
#include "sturmlab/torus/continued_fraction.hpp"
#include "sturmlab/torus/field.hpp"
#include "sturmlab/util/parallel.hpp"

namespace sturmlab::ergodicity {

using torus::FieldFrame;
using torus::OrbitCursor;
using Point = FieldFrame::Point;

namespace {

// Arc membership on the exact kernel.
struct ArcTest {
  const FieldFrame* frame;
  Point lo, hi;
  bool lo_closed, hi_closed, wraps;

  ArcTest(const FieldFrame& f, const Arc& A)
      : frame(&f), lo(f.embed(A.lo)), hi(f.embed(A.hi)), lo_closed(A.lo_closed),
        hi_closed(A.hi_closed), wraps(A.wraps()) {}

  bool operator()(const Point& x) const {
    const int cl = frame->cmp(x, lo);
    const int ch = frame->cmp(x, hi);
    const bool above = cl > 0 || (cl == 0 && lo_closed);
    const bool below = ch < 0 || (ch == 0 && hi_closed);
    return wraps ? (above || below) : (above && below);
  }
};

void require_hypotheses(const Quad& phi, const Arc& P, std::int64_t k, std::int64_t d) {
  if (phi.is_rational()) throw HypothesisError("phi must be irrational");
  if (k < 1) throw std::invalid_argument("hitting_count: k must be >= 1");
  if (d < 1) throw std::invalid_argument("hitting_count: d must be >= 1");
  if (P.length() < Quad::rational(1, 2, P.lo.d())) {
    throw HypothesisError("the arc P must have length at least 1/2, got " + P.to_string());
  }
}

Quad as_field(const Quad& x, const Int& d) {
  return x.is_rational() ? Quad::rational(x.p(), x.r(), d) : x;
}

// P reflected through 0: x -> -x.
Arc reflect(const Arc& P, const Int& d) {
  const Quad one = Quad::integer(1, d);
  const Quad lo = (one - P.hi).frac();
  Quad hi = one - P.lo;
  return Arc{lo, hi, P.hi_closed, P.lo_closed};
}

// P rotated so that it starts at 1/2.
Arc rotate_to_half(const Arc& P, const Int& d) {
  const Quad half = Quad::rational(1, 2, d);
  Quad hi = half + P.length();
  if (hi > Quad::integer(1, d)) hi -= Quad::integer(1, d);
  return Arc{half, hi, P.lo_closed, P.hi_closed};
}

bool is_full_circle(const Arc& P) {
  return P.length() == Quad::integer(1, P.lo.d()) && P.lo_closed != P.hi_closed;
}

}  // namespace

Arc forbidden_arc(const Quad& phi) {
  const Quad f = phi.frac();
  return Arc::closed(Quad::integer(1, f.d()) - f, f);
}

std::vector<Quad> spread_points(const Quad& phi, std::int64_t count) {
  std::vector<Quad> out;
  for (std::int64_t j = 0; j < count; ++j) {
    out.push_back((Quad::rational(j, count, phi.d()) + phi * Int(j) / Int(3)).frac());
  }
  return out;
}

std::int64_t hitting_d(const Quad& phi, std::int64_t k_scan) {
  return torus::badly_constant_scan(phi.frac(), k_scan).d;
}

HittingResult hitting_count(const Quad& phi_in, const Quad& x0_in, std::int64_t k, std::int64_t d,
                            const Arc& P_in, const HittingOptions& opts) {
  const Int D = phi_in.d();
  const Arc P{as_field(P_in.lo, D), as_field(P_in.hi, D), P_in.lo_closed, P_in.hi_closed};
  require_hypotheses(phi_in, P, k, d);
  const Quad phi = phi_in.frac();
  const Quad x0 = as_field(x0_in, D).frac();
  const Quad half = Quad::rational(1, 2, D);

  HittingResult res;
  res.k = k;
  res.d = d;
  res.bound = static_cast<double>(d) * static_cast<double>(k) / 6.0;

  const Quad beta = (phi * Int(k)).frac();
  res.reflected = beta > half;
  const Quad b = res.reflected ? Quad::integer(1, D) - beta : beta;
  res.n_bracket = to_int64(b.reciprocal().floor());
  const std::int64_t n = res.n_bracket;
  const std::int64_t dk = d * k;
  // n = 4 satisfies both case 1 and case 3; case 3 is used.
  if (n <= 4) {
    res.case_id = 3;
    res.case_bound = dk / 4;
  } else if (2 * (n + 1) <= dk) {
    res.case_id = 1;
    res.case_bound = (dk / (n + 1)) * (n / 2);
  } else {
    res.case_id = 2;
    res.case_bound = n <= dk ? n / 2 : 0;
  }

  const bool full = is_full_circle(P);
  const FieldFrame frame = FieldFrame::common({&phi, &x0, &P.lo, &P.hi, &half});
  const ArcTest in_P(frame, P);
  {
    OrbitCursor orbit(frame, frame.embed(x0), frame.scale(frame.embed(phi), k));
    std::int64_t hits = 0;
    for (std::int64_t i = 1; i <= dk; ++i) {
      orbit.advance();
      if (full || in_P(orbit.point())) ++hits;
    }
    res.hits = hits;
  }
  res.pass = static_cast<double>(res.hits) >= res.bound;

  if (opts.proof_frame) {
    Quad y0 = x0;
    Arc Q = P;
    if (res.reflected) {
      y0 = (Quad::integer(0, D) - x0).frac();
      Q = reflect(P, D);
    }
    const Quad shift = half - Q.lo;
    y0 = (y0 + shift).frac();
    Q = rotate_to_half(Q, D);
    const FieldFrame pf = FieldFrame::common({&b, &y0, &Q.lo, &Q.hi, &half});
    const ArcTest in_Q(pf, Q);
    const Arc upper{half, Quad::integer(1, D), true, false};
    const ArcTest in_upper(pf, upper);
    OrbitCursor orbit(pf, pf.embed(y0), pf.embed(b));
    std::int64_t hits = 0;
    std::int64_t since_upper = 0;
    for (std::int64_t i = 1; i <= dk; ++i) {
      orbit.advance();
      if (full || in_Q(orbit.point())) ++hits;
      since_upper = in_upper(orbit.point()) ? 0 : since_upper + 1;
      if (res.case_id == 3 && since_upper >= 4) res.case3_local_ok = false;
    }
    res.proof_frame_hits = hits;
  }
  return res;
}

HittingScan hitting_scan(const Quad& phi, const Quad& x0, const Arc& P, std::int64_t k_lo,
                         std::int64_t k_hi, std::int64_t d, const HittingOptions& opts,
                         unsigned threads) {
  if (k_lo < 1 || k_hi < k_lo) throw std::invalid_argument("hitting_scan: need 1 <= k_lo <= k_hi");
  HittingScan out;
  out.d = d;
  const auto n = static_cast<std::size_t>(k_hi - k_lo + 1);
  out.results = util::parallel_map(n, threads, [&](std::size_t i) {
    return hitting_count(phi, x0, k_lo + static_cast<std::int64_t>(i), d, P, opts);
  });
  out.r_empirical = static_cast<double>(out.results.front().hits) / double(out.results.front().k);
  for (const auto& r : out.results) {
    out.r_empirical = std::min(out.r_empirical, double(r.hits) / double(r.k));
  }
  if (out.results.back().pass) {
    std::int64_t ks = out.results.back().k;
    for (auto it = out.results.rbegin(); it != out.results.rend() && it->pass; ++it) ks = it->k;
    out.k_star = ks;
  }
  return out;
}

LemmaReport lemma_bound_check(const Quad& phi_in, std::int64_t k_max) {
  if (phi_in.is_rational()) throw HypothesisError("phi must be irrational");
  if (k_max < 1) throw std::invalid_argument("lemma_bound_check: k_max must be >= 1");
  const Quad phi = phi_in.frac();
  const auto scan = torus::badly_constant_scan(phi, k_max);

  LemmaReport rep;
  rep.k_max = k_max;
  rep.min_value = scan.min_value;
  rep.c_est = scan.c_est;
  rep.argmin_k = scan.argmin_k;

  const FieldFrame frame = FieldFrame::common({&phi, &scan.min_value});
  const Point min_pt = frame.embed(scan.min_value);
  OrbitCursor orbit(frame, frame.embed(phi), frame.embed(phi));
  bool above = true;
  Point best{};
  struct Cand {
    std::int64_t k;
    Point v;
  };
  std::vector<Cand> small;
  for (std::int64_t k = 1; k <= k_max; ++k, orbit.advance()) {
    const Point v = frame.scale(frame.circle_distance_to_zero(orbit.point()), k);
    if (frame.cmp(v, min_pt) < 0) above = false;
    if (k == 1 || frame.cmp(v, best) < 0) {
      best = v;
      rep.records.push_back({k, frame.to_double(v)});
    }
    if (small.size() < 3 || frame.cmp(v, small.back().v) < 0) {
      if (small.size() == 3) small.pop_back();
      auto pos = std::find_if(small.begin(), small.end(),
                              [&](const Cand& c) { return frame.cmp(v, c.v) < 0; });
      small.insert(pos, {k, v});
    }
  }
  const Quad c_quad = Quad::rational(numerator(scan.c_est), denominator(scan.c_est), phi.d());
  rep.bound_holds = above && scan.min_value > c_quad;
  for (const auto& c : small) rep.smallest.push_back({c.k, frame.to_double(c.v)});

  const auto cf = torus::cf_expand(phi, 4096);
  for (const auto& q : torus::convergent_denominators(cf, Int(k_max))) {
    rep.convergent_denominators.push_back(to_int64(q));
  }
  rep.records_at_convergents = std::all_of(rep.records.begin(), rep.records.end(), [&](const auto& r) {
    return std::binary_search(rep.convergent_denominators.begin(),
                              rep.convergent_denominators.end(), r.k);
  });
  return rep;
}

}  // namespace sturmlab::ergodicity
