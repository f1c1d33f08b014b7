#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "sturmlab/errors.hpp"
#include "sturmlab/torus/arc.hpp"
#include "sturmlab/torus/badly.hpp"
#include "sturmlab/torus/continued_fraction.hpp"
#include "sturmlab/torus/field.hpp"

using namespace sturmlab;
using namespace sturmlab::torus;

namespace {

const Quad kPhi = Quad::make(3, -1, 1, 5);  // 3 - sqrt 5
const Quad kGolden = Quad::make(1, 1, 2, 5);

Quad rq(long long p, long long q, long long r, long long d) { return Quad::make(p, q, r, d); }

}  // namespace

TEST_CASE("make_quad canonical forms and contract") {
  CHECK(kPhi > Quad::rational(3, 4, 5));
  CHECK(kPhi < Quad::integer(1, 5));
  const Quad half = rq(1, 0, 2, 5);
  CHECK(half.is_rational());
  CHECK(half == Quad::rational(1, 2));
  CHECK_THROWS_AS(rq(0, 1, 1, 4), std::invalid_argument);
  CHECK_THROWS_AS(rq(1, 1, 0, 5), std::invalid_argument);
  CHECK_THROWS_AS(rq(1, 1, 1, -5), std::invalid_argument);

  const Quad x = rq(6, -2, -4, 5);  // (-3 + sqrt 5)/2
  CHECK(x.r() == 2);
  CHECK(x.p() == -3);
  CHECK(x.q() == 1);
}

TEST_CASE("cmp examples") {
  CHECK(cmp(kPhi, Quad::rational(3, 4)) == std::strong_ordering::greater);
  CHECK(cmp(kPhi, kPhi) == std::strong_ordering::equal);
  CHECK(cmp(rq(-2, 1, 1, 5), Quad::rational(1, 4)) == std::strong_ordering::less);
  CHECK_THROWS_AS(cmp(rq(0, 1, 1, 5), rq(0, 1, 1, 3)), std::invalid_argument);
}

TEST_CASE("cmp agrees with the 50-digit oracle on random field elements") {
  std::mt19937_64 rng(12345);
  std::uniform_int_distribution<long long> coef(-5000, 5000), den(1, 3000);
  for (int i = 0; i < 4000; ++i) {
    const Quad a = rq(coef(rng), coef(rng), den(rng), 5);
    const Quad b = rq(coef(rng), coef(rng), den(rng), 5);
    const auto fa = oracle::value(a), fb = oracle::value(b);
    const auto diff = fa - fb;
    if (abs(diff) < oracle::F50("1e-40")) continue;
    CHECK((cmp(a, b) < 0) == (diff < 0));
  }
}

TEST_CASE("floor_frac examples and reconstruction") {
  auto [f2, r2] = (kPhi * Int(2)).floor_frac();
  CHECK(f2 == 1);
  CHECK(r2 == rq(5, -2, 1, 5));
  CHECK(abs(oracle::value(r2) - oracle::F50("0.52786404500042060718")) < oracle::F50("1e-18"));

  auto [fh, rh] = Quad::rational(1, 2).floor_frac();
  CHECK(fh == 0);
  CHECK(rh == Quad::rational(1, 2));

  auto [fm, rm] = (-kPhi).floor_frac();
  CHECK(fm == -1);
  CHECK(rm == rq(-2, 1, 1, 5));

  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long long> coef(-100000, 100000), den(1, 977);
  for (int i = 0; i < 3000; ++i) {
    const Quad x = rq(coef(rng), coef(rng), den(rng), 5);
    auto [fl, fr] = x.floor_frac();
    CHECK(fr.sign() >= 0);
    CHECK(fr < Quad::integer(1, 5));
    CHECK(Quad::integer(fl, 5) + fr == x);
    CHECK(oracle::F50(fl.str()) == boost::multiprecision::floor(oracle::value(x)));
  }
}

TEST_CASE("in_arc boundary handling") {
  const Arc A = Arc::closed(Quad::integer(1, 5) - kPhi, kPhi);
  CHECK(in_arc(kPhi, A));
  CHECK_FALSE(in_arc(kPhi * Int(4), A));
  CHECK(in_arc(Quad::integer(0), Arc::full_circle()));
  const Arc open_hi = Arc::make(Quad::integer(1, 5) - kPhi, kPhi, true, false);
  CHECK_FALSE(in_arc(kPhi, open_hi));
  // Wrap-around arc [0.9, 0.1].
  const Arc wrap = Arc::closed(Quad::rational(9, 10), Quad::rational(1, 10));
  CHECK(wrap.wraps());
  CHECK(in_arc(Quad::rational(19, 20), wrap));
  CHECK(in_arc(Quad::rational(1, 20), wrap));
  CHECK_FALSE(in_arc(Quad::rational(1, 2), wrap));
  CHECK(wrap.length() == Quad::rational(1, 5));
}

TEST_CASE("cf_expand against the float oracle and known expansions") {
  const auto cf = cf_expand(kPhi, 32);
  REQUIRE(cf.periodic_tail.has_value());
  const auto expect = oracle::cf(oracle::value(kPhi), 20);
  for (std::size_t i = 0; i < expect.size(); ++i) CHECK(cf.quotient(i) == expect[i]);
  CHECK(cf.quotient(0) == 0);
  CHECK(cf.quotient(1) == 1);
  CHECK(cf.quotient(2) == 3);
  CHECK(cf.periodic_tail->start == 3);
  CHECK(cf.periodic_tail->length == 1);
  CHECK(cf.bounded_quotients());

  const auto g = cf_expand(kGolden, 8);
  REQUIRE(g.periodic_tail.has_value());
  CHECK(g.periodic_tail->length == 1);
  for (std::size_t i = 0; i < 10; ++i) CHECK(g.quotient(i) == 1);

  CHECK_THROWS_AS(cf_expand(Quad::rational(1, 2), 8), std::invalid_argument);
}

TEST_CASE("cf_expand detects periods of random quadratic irrationals") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long long> coef(-30, 30), den(1, 30);
  const long long ds[] = {2, 3, 5, 6, 7, 10, 13, 19, 31};
  for (int i = 0; i < 200; ++i) {
    long long q = coef(rng);
    if (q == 0) q = 1;
    const Quad x = rq(coef(rng), q, den(rng), ds[i % 9]);
    const auto cf = cf_expand(x, 200000);
    REQUIRE(cf.periodic_tail.has_value());
    const auto expect = oracle::cf(oracle::value(x), 12);
    for (std::size_t j = 0; j < expect.size(); ++j) CHECK(cf.quotient(j) == expect[j]);
  }
}

TEST_CASE("convergents") {
  const auto g = convergents(cf_expand(kGolden, 8), 4);
  REQUIRE(g.size() == 5);
  CHECK(g[0] == std::make_pair(Int(1), Int(1)));
  CHECK(g[1] == std::make_pair(Int(2), Int(1)));
  CHECK(g[2] == std::make_pair(Int(3), Int(2)));
  CHECK(g[3] == std::make_pair(Int(5), Int(3)));
  CHECK(g[4] == std::make_pair(Int(8), Int(5)));
  CHECK(convergents(cf_expand(kGolden, 8), 0).size() == 1);

  const auto cf = cf_expand(kPhi, 32);
  const auto c = convergents(cf, 12);
  for (std::size_t k = 0; k + 1 < c.size(); ++k) {
    const auto& [p, q] = c[k];
    CHECK(gcd(p, q) == 1);
    const Quad err = kPhi - Quad::rational(p, q, 5);
    const Quad abs_err = err.sign() < 0 ? -err : err;
    CHECK(abs_err < Quad::rational(1, q * c[k + 1].second, 5));
  }

  // Brute force: best approximations of the second kind (records of |q phi - p|)
  // are exactly the convergents with distinct denominators, up to q_5.
  const Int q5 = c[5].second;
  std::vector<Int> record_q;
  Quad best = Quad::integer(2, 5);
  for (Int q = 1; q <= q5; ++q) {
    const Quad v = kPhi * q;
    const Quad dist = circle_distance_to_zero(v);
    if (dist < best) {
      best = dist;
      record_q.push_back(q);
    }
  }
  const auto dens = convergent_denominators(cf, q5);
  CHECK(record_q == dens);
}

TEST_CASE("badly_constant_scan") {
  const Quad golden_conj = rq(-1, 1, 2, 5);
  const auto g = badly_constant_scan(golden_conj, 100000);
  // The minimum sits at k = 1; 1/sqrt 5 is only approached along the records.
  CHECK(g.argmin_k == 1);
  CHECK(g.min_value == Quad::integer(1, 5) - golden_conj);
  REQUIRE(g.records.size() == 1);
  double tail_min = 1.0;
  const FieldFrame f = FieldFrame::common(golden_conj, golden_conj);
  for (long long k = 100; k <= 100000; ++k) {
    tail_min = std::min(tail_min, k * f.to_double(f.circle_distance_to_zero(f.scale(f.embed(golden_conj), k))));
  }
  CHECK(tail_min == doctest::Approx(1 / std::sqrt(5.0)).epsilon(1e-3));

  const auto s = badly_constant_scan(kPhi, 100000);
  CHECK(s.c_est > 0);
  CHECK(s.c_est.convert_to<double>() == doctest::Approx(0.2236).epsilon(1e-3));
  CHECK(s.d == 5);
  CHECK(Quad::rational(numerator(s.c_est), denominator(s.c_est), 5) < s.min_value);

  const auto one = badly_constant_scan(kPhi, 1);
  CHECK(one.argmin_k == 1);
  CHECK(one.min_value == Quad::integer(1, 5) - kPhi);
  CHECK_THROWS_AS(badly_constant_scan(Quad::rational(1, 3), 10), HypothesisError);
}

TEST_CASE("field frame matches the bignum path") {
  const Quad x0 = rq(1, 1, 7, 5);
  const FieldFrame f = FieldFrame::common(kPhi, x0);
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long long> n(-2000000, 2000000);
  for (int i = 0; i < 2000; ++i) {
    const long long k = n(rng);
    const auto fast = f.frac(f.add(f.embed(x0), f.scale(f.embed(kPhi), k)));
    const Quad slow = (x0 + kPhi * Int(k)).frac();
    CHECK(f.to_quad(fast) == slow);
    CHECK(f.floor(f.add(f.embed(x0), f.scale(f.embed(kPhi), k))) ==
          static_cast<long long>((x0 + kPhi * Int(k)).floor()));
  }
  OrbitCursor orbit(f, f.embed(x0), f.embed(kPhi));
  Quad ref = x0;
  for (int i = 0; i < 3000; ++i, orbit.advance()) {
    CHECK(f.to_quad(orbit.point()) == ref);
    ref = (ref + kPhi).frac();
  }
  CHECK_THROWS_AS(f.scale(f.embed(kPhi), (1LL << 62)), ExactRangeError);
}

TEST_CASE("isqrt128") {
  for (long long v : {0LL, 1LL, 2LL, 3LL, 4LL, 99LL, 100LL, 101LL}) {
    const auto s = isqrt128(v);
    CHECK(s * s <= v);
    CHECK((s + 1) * (s + 1) > v);
  }
  const i128 big = (static_cast<i128>(1) << 124) + 12345;
  const auto s = isqrt128(big);
  CHECK(s * s <= big);
  CHECK((s + 1) * (s + 1) > big);
}
