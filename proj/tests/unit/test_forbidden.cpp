#include "doctest.h"
#include "oracle.hpp"
#include "sturmlab/errors.hpp"
#include "sturmlab/forbidden/model.hpp"
#include "sturmlab/words/rotation.hpp"

using namespace sturmlab;
using namespace sturmlab::forbidden;

namespace {

const Quad kPhi = Quad::make(3, -1, 1, 5);

// F by the 50-digit oracle: {k phi} in [1 - phi, phi].
std::vector<std::int64_t> oracle_forbidden(std::int64_t k_max) {
  const auto phi = oracle::value(kPhi);
  std::vector<std::int64_t> out;
  for (std::int64_t k = 1; k <= k_max; ++k) {
    const auto f = oracle::frac(k * phi);
    if (f >= 1 - phi && f <= phi) out.push_back(k);
  }
  return out;
}

}  // namespace

TEST_CASE("is_forbidden_distance examples") {
  const ForbiddenModel M(kPhi, 5);
  CHECK(is_forbidden_distance(M, 1));
  CHECK_FALSE(is_forbidden_distance(M, 4));
  CHECK(is_forbidden_distance(M, 6));
  CHECK_FALSE(is_forbidden_distance(M, 9));
  CHECK_THROWS_AS(is_forbidden_distance(M, 0), std::invalid_argument);
  CHECK_THROWS_AS(ForbiddenModel(Quad::make(-1, 1, 2, 5) * Int(1) - Quad::rational(1, 5, 5), 5),
                  HypothesisError);
}

TEST_CASE("forbidden_set spot values agree with the float oracle") {
  const ForbiddenModel M(kPhi, 5);
  const std::vector<std::int64_t> expect{1, 2, 3, 6, 7, 10};
  CHECK(forbidden_set(M, 10) == expect);
  CHECK(oracle_forbidden(10) == expect);
  CHECK(forbidden_set(M, 1) == std::vector<std::int64_t>{1});
  CHECK(forbidden_set(M, 2000) == oracle_forbidden(2000));
}

TEST_CASE("density of F approaches the arc length") {
  const ForbiddenModel M(kPhi, 5);
  const double dens = static_cast<double>(forbidden_set(M, 100000).size()) / 100000.0;
  CHECK(std::abs(dens - (2 * (3 - std::sqrt(5.0)) - 1)) < 1e-3);
}

TEST_CASE("zero_run_bound") {
  const auto z = zero_run_bound(kPhi, 100000);
  CHECK(z.m == 5);
  CHECK(z.max_run == 4);
  CHECK(z.gaps == std::vector<std::int64_t>{4, 5});
  CHECK(z.stable);
  CHECK(z.three_distance_ok);
  CHECK(ForbiddenModel::from_scan(kPhi).zero_run_m() == 5);

  // A phi just above 1/2: 1's become frequent, zero runs short.
  const Quad near_half = Quad::make(-1, 1, 2, 5) - Quad::rational(1, 10, 5) + Quad::rational(1, 50, 5);
  const auto z2 = zero_run_bound(near_half, 100000);
  CHECK(z2.m >= 2);
  CHECK(z2.m <= 3);
}

TEST_CASE("verify_characterization on a long window") {
  const ForbiddenModel M(kPhi, 5);
  const auto rep = verify_characterization(M, 1000000, 300);
  CHECK(rep.ok());
  CHECK(rep.violation_count == 0);
  CHECK(rep.unrealized.empty());
  const auto it = std::find_if(rep.witnesses.begin(), rep.witnesses.end(),
                               [](const Witness& w) { return w.k == 4; });
  REQUIRE(it != rep.witnesses.end());
  CHECK(it->position == 1);

  // Witness points y = {n phi} lie in [phi, 1) together with y + k phi.
  const words::SturmianWord x(kPhi, Quad::integer(0, 5));
  for (const auto& w : rep.witnesses) {
    const Quad y = (kPhi * Int(w.position)).frac();
    const Quad yk = (kPhi * Int(w.position + w.k)).frac();
    CHECK(y >= kPhi);
    CHECK(yk >= kPhi);
  }
}

TEST_CASE("a corrupted word reports violations") {
  const ForbiddenModel M(kPhi, 5);
  const words::SturmianWord x(kPhi, Quad::integer(0, 5));
  auto w = x.window(0, 5000);
  for (std::size_t i = 100; i < 110; ++i) {
    if (!w[i]) {
      w.flip(i);
      break;
    }
  }
  const auto rep = verify_word(M, w, 50);
  CHECK_FALSE(rep.ok());
  CHECK(rep.violation_count >= 1);

  auto z = x.window(0, 5000);
  for (std::size_t i = 200; i < 220; ++i) z.set(i, 0);
  const auto rz = verify_word(M, z, 50);
  CHECK_FALSE(rz.ok());
  CHECK(std::any_of(rz.violations.begin(), rz.violations.end(),
                    [](const Violation& v) { return v.kind == "zero_run"; }));
}

TEST_CASE("tiled Sturmian windows violate only across seams") {
  const ForbiddenModel M(kPhi, 5);
  for (long long k : {7LL, 12LL, 29LL, 72LL}) {
    const auto y = words::periodic_sturmian(kPhi, k, Quad::integer(0, 5));
    const auto w = y.window(0, 40 * k);
    const auto rep = verify_word(M, w, 3 * k);
    for (const auto& v : rep.violations) {
      const long long a = v.position;
      const long long b = v.kind == "pair" ? a + v.distance : a + v.distance - 1;
      // Both ends inside one period copy would be a violation inside a Sturmian factor.
      CHECK(a / k != b / k);
    }
  }
}
