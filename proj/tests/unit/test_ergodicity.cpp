#include <cmath>

#include "doctest.h"
#include "oracle.hpp"
#include "sturmlab/errors.hpp"
#include "sturmlab/ergodicity/hitting.hpp"
#include "sturmlab/torus/continued_fraction.hpp"

using namespace sturmlab;
using namespace sturmlab::ergodicity;

namespace {

const Quad kPhi = Quad::make(3, -1, 1, 5);

// Hits of {x0 + i k phi}, i = 1..dk, in the closed arc [lo, hi] (no wrap) by
// the float oracle.
std::int64_t oracle_hits(const Quad& phi, const Quad& x0, std::int64_t k, std::int64_t d,
                         const Quad& lo, const Quad& hi) {
  const auto p = oracle::value(phi), x = oracle::value(x0);
  const auto a = oracle::value(lo), b = oracle::value(hi);
  std::int64_t hits = 0;
  for (std::int64_t i = 1; i <= d * k; ++i) {
    const auto y = oracle::frac(x + oracle::F50(i * k) * p);
    if (y >= a && y <= b) ++hits;
  }
  return hits;
}

}  // namespace

TEST_CASE("hitting_count: the d k / 6 bound at k = 100") {
  const std::int64_t d = hitting_d(kPhi, 100000);
  CHECK(d == 5);
  const auto r = hitting_count(kPhi, Quad::integer(0, 5), 100, d, forbidden_arc(kPhi));
  CHECK(r.pass);
  CHECK(r.hits >= 500 / 6);
  CHECK(r.bound == doctest::Approx(500.0 / 6));
}

TEST_CASE("hitting_count agrees with the float oracle") {
  const Arc P = forbidden_arc(kPhi);
  const Quad x0 = Quad::make(1, 1, 7, 5).frac();
  for (std::int64_t k : {2, 3, 7, 17, 50, 72, 123}) {
    const auto r = hitting_count(kPhi, x0, k, 5, P);
    CHECK(r.hits == oracle_hits(kPhi, x0, k, 5, P.lo, P.hi));
  }
}

TEST_CASE("full circle is always hit") {
  for (std::int64_t k : {1, 5, 40}) {
    const auto r = hitting_count(kPhi, Quad::integer(0, 5), k, 3, Arc::full_circle(5));
    CHECK(r.hits == 3 * k);
  }
}

TEST_CASE("hypotheses are enforced") {
  const Arc short_arc = Arc::closed(Quad::rational(1, 10, 5), Quad::rational(1, 2, 5));
  CHECK_THROWS_AS(hitting_count(kPhi, Quad::integer(0, 5), 10, 5, short_arc), HypothesisError);
  const Arc half = Arc::make(Quad::rational(1, 2, 5), Quad::integer(1, 5), true, false);
  CHECK_NOTHROW(hitting_count(kPhi, Quad::integer(0, 5), 10, 5, half));
  CHECK_THROWS_AS(hitting_count(Quad::rational(1, 3), Quad::integer(0), 10, 5, half),
                  HypothesisError);
  CHECK_THROWS_AS(hitting_count(kPhi, Quad::integer(0, 5), 0, 5, half), std::invalid_argument);
  CHECK_THROWS_AS(lemma_bound_check(Quad::rational(2, 7), 100), HypothesisError);
}

TEST_CASE("n bracket and case classification") {
  const auto p = oracle::value(kPhi);
  for (std::int64_t k = 1; k <= 400; ++k) {
    const auto r = hitting_count(kPhi, Quad::integer(0, 5), k, 5, forbidden_arc(kPhi));
    auto beta = oracle::frac(oracle::F50(k) * p);
    CHECK(r.reflected == (beta > 0.5));
    if (beta > 0.5) beta = 1 - beta;
    const auto n = boost::multiprecision::floor(1 / beta).convert_to<long long>();
    CHECK(r.n_bracket == n);
    const int expect = n <= 4 ? 3 : (2 * (n + 1) <= 5 * k ? 1 : 2);
    CHECK(r.case_id == expect);
    CHECK(r.hits >= r.case_bound);
  }
}

TEST_CASE("proof frame replays the same hits and the case 3 window property") {
  int case3 = 0;
  for (const auto& x0 : spread_points(kPhi, 8)) {
    for (std::int64_t k = 1; k <= 300; ++k) {
      const auto r = hitting_count(kPhi, x0, k, 5, forbidden_arc(kPhi), {true});
      CHECK(r.proof_frame_hits == r.hits);
      if (r.case_id == 3) {
        ++case3;
        CHECK(r.case3_local_ok);
      }
    }
  }
  CHECK(case3 > 0);
  // A wrapping half-open arc of length exactly 1/2.
  const Arc wrap = Arc::make(Quad::rational(3, 4, 5), Quad::rational(1, 4, 5), true, false);
  for (std::int64_t k = 1; k <= 200; ++k) {
    const auto r = hitting_count(kPhi, Quad::rational(1, 3, 5), k, 5, wrap, {true});
    CHECK(r.proof_frame_hits == r.hits);
    CHECK(r.case3_local_ok);
  }
}

TEST_CASE("hits over a long orbit approach the arc length") {
  const Arc P = forbidden_arc(kPhi);
  const double len = P.length().to_double();
  for (std::int64_t k : {1, 3}) {
    const std::int64_t d = 1000000;
    const auto r = hitting_count(kPhi, Quad::integer(0, 5), k, d, P);
    CHECK(std::abs(double(r.hits) / double(d * k) - len) < 1e-4);
  }
}

TEST_CASE("hitting_scan records k* and r independent of x0 and threads") {
  const Arc P = forbidden_arc(kPhi);
  const auto s1 = hitting_scan(kPhi, Quad::integer(0, 5), P, 10, 400, 5, {}, 1);
  REQUIRE(s1.k_star.has_value());
  CHECK(s1.r_empirical >= 5.0 / 6);
  const auto s4 = hitting_scan(kPhi, Quad::integer(0, 5), P, 10, 400, 5, {}, 4);
  REQUIRE(s4.results.size() == s1.results.size());
  for (std::size_t i = 0; i < s1.results.size(); ++i) {
    CHECK(s1.results[i].k == s4.results[i].k);
    CHECK(s1.results[i].hits == s4.results[i].hits);
  }
  for (const auto& x0 : spread_points(kPhi, 6)) {
    const auto s = hitting_scan(kPhi, x0, P, 10, 400, 5);
    REQUIRE(s.k_star.has_value());
    CHECK(*s.k_star == *s1.k_star);
  }
}

TEST_CASE("spread_points are distinct and in [0, 1)") {
  const auto pts = spread_points(kPhi, 32);
  CHECK(pts.size() == 32);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    CHECK(pts[i].sign() >= 0);
    CHECK(pts[i] < Quad::integer(1, 5));
    for (std::size_t j = 0; j < i; ++j) CHECK(pts[i] != pts[j]);
  }
}

TEST_CASE("lemma check: records at convergent denominators") {
  for (const Quad& phi : {kPhi, Quad::make(-1, 1, 2, 5), Quad::make(0, 1, 1, 2).frac(),
                          Quad::make(0, 1, 1, 7).frac()}) {
    const auto rep = lemma_bound_check(phi, 100000);
    CHECK(rep.bound_holds);
    CHECK(rep.records_at_convergents);
    CHECK(rep.min_value.sign() > 0);
    REQUIRE(rep.smallest.size() == 3);
    CHECK(rep.smallest[0].value <= rep.smallest[1].value);
    CHECK(rep.smallest[1].value <= rep.smallest[2].value);
    CHECK(rep.smallest[0].k == rep.argmin_k);
    const auto qs = torus::convergent_denominators(torus::cf_expand(phi, 100), Int(100000));
    CHECK(rep.convergent_denominators.size() == qs.size());
  }
  const auto rep = lemma_bound_check(kPhi, 10);
  CHECK(rep.records.front().k == 1);
  CHECK(rep.records.front().value == doctest::Approx((Quad::integer(1, 5) - kPhi).to_double()));
}
