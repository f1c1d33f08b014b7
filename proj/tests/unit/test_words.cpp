#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "oracle.hpp"
#include "sturmlab/words/rotation.hpp"
#include "sturmlab/words/stats.hpp"

using namespace sturmlab;
using namespace sturmlab::words;

namespace {

const Quad kPhi = Quad::make(3, -1, 1, 5);
const Quad kZero = Quad::integer(0, 5);

FiniteWord fw(const char* s) { return FiniteWord::from_string(s); }

}  // namespace

TEST_CASE("FiniteWord basics") {
  const FiniteWord w = fw("0100010001");
  CHECK(w.size() == 10);
  CHECK(w.popcount() == 3);
  CHECK(w.to_string() == "0100010001");
  CHECK(w.slice(1, 5).to_string() == "10001");
  CHECK(w.reversed().to_string() == "1000100010");
  CHECK_THROWS_AS(FiniteWord::from_string("012"), std::invalid_argument);
  FiniteWord g;
  for (int i = 0; i < 130; ++i) g.push_back(i % 3 == 0);
  CHECK(g.size() == 130);
  CHECK(g.popcount() == 44);
}

TEST_CASE("symbol_at examples") {
  const SturmianWord x(kPhi, kZero);
  CHECK(x.symbol_at(0) == 0);
  CHECK(x.symbol_at(1) == 1);
  CHECK(x.window(0, 9).to_string() == "0100010001");
  CHECK(x.window(0, 19).to_string() == "01000100010001000100");
  const FiniteWord w = x.window(-2, 2);
  CHECK(w.origin() == -2);
  for (int n = -2; n <= 2; ++n) CHECK(w.at(n) == x.symbol_at(n));
  CHECK(x.window(5, 5).to_string() == std::string(1, '0' + x.symbol_at(5)));
}

TEST_CASE("fast symbols agree with the bignum reference and the float oracle") {
  const Quad x0 = Quad::make(2, 1, 9, 5);
  const SturmianWord x(kPhi, x0);
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long long> n(-5000000, 5000000);
  const auto phi50 = oracle::value(kPhi), x050 = oracle::value(x0);
  for (int i = 0; i < 1500; ++i) {
    const long long k = n(rng);
    CHECK(x.symbol_at(k) == x.symbol_at_reference(k));
    const auto pt = oracle::frac(x050 + k * phi50);
    CHECK(x.symbol_at(k) == (pt < phi50 ? 0 : 1));
  }
  const FiniteWord w = x.window(-3000, 3000);
  for (long long k = -3000; k <= 3000; ++k) CHECK(w.at(k) == x.symbol_at(k));
}

TEST_CASE("conventions differ only where the orbit hits an endpoint") {
  const SturmianWord l(kPhi, kZero, Convention::left_closed);
  const SturmianWord r(kPhi, kZero, Convention::right_closed);
  const FiniteWord a = l.window(-20000, 20000), b = r.window(-20000, 20000);
  std::vector<long long> diff;
  for (long long n = -20000; n <= 20000; ++n) {
    if (a.at(n) != b.at(n)) diff.push_back(n);
  }
  // {n phi} = 0 only at n = 0, {n phi} = phi only at n = 1.
  CHECK(diff == std::vector<long long>{0, 1});
}

TEST_CASE("pattern_count") {
  CHECK(pattern_count(fw("0100010001"), fw("1")) == 3);
  CHECK(pattern_count(fw("0001000"), fw("00")) == 4);
  CHECK(pattern_count(fw("01"), fw("0110")) == 0);
  std::mt19937_64 rng(4);
  FiniteWord big(3000);
  for (std::size_t i = 0; i < big.size(); ++i) big.set(i, rng() % 2);
  const std::string s = big.to_string();
  for (const char* p : {"1", "101", "0000", "1101011"}) {
    long long brute = 0;
    const std::string ps(p);
    for (std::size_t i = 0; i + ps.size() <= s.size(); ++i) brute += s.compare(i, ps.size(), ps) == 0;
    CHECK(pattern_count(big, fw(p)) == brute);
  }
  CHECK(cyclic_pattern_count(fw("10"), fw("1")) == 1);
  CHECK(cyclic_pattern_count(fw("10"), fw("01")) == 1);
  CHECK(cyclic_pattern_count(fw("100"), fw("001")) == 1);
  CHECK(cyclic_pattern_count(fw("0"), fw("00000")) == 1);
}

TEST_CASE("factor complexity is L + 1") {
  const SturmianWord x(kPhi, kZero);
  CHECK(factor_complexity(x, 1, 1000) == 2);
  CHECK(factor_complexity(x, 4, 10000) == 5);
  CHECK(factor_complexity(x, 10, 100000) == 11);
  for (int L = 1; L <= 20; ++L) CHECK(factor_complexity(x, L, 100000) == L + 1);
}

TEST_CASE("balance: 1-counts of equal-length windows differ by at most one") {
  const SturmianWord x(kPhi, kZero);
  const FiniteWord w = x.window(0, 100000);
  for (std::size_t L = 1; L <= 60; ++L) {
    long long lo = 1 << 30, hi = -1, c = 0;
    for (std::size_t i = 0; i < L; ++i) c += w[i];
    for (std::size_t i = 0;; ++i) {
      lo = std::min(lo, c);
      hi = std::max(hi, c);
      if (i + L >= w.size()) break;
      c += w[i + L] - w[i];
    }
    CHECK(hi - lo <= 1);
  }
}

TEST_CASE("frequency estimates") {
  const SturmianWord x(kPhi, kZero);
  const double f1 = frequency_estimate(x, fw("1"), 1000000).convert_to<double>();
  CHECK(std::abs(f1 - (std::sqrt(5.0) - 2)) < 1e-5);
  const double f0 = frequency_estimate(x, fw("0"), 1000000).convert_to<double>();
  CHECK(std::abs(f0 - (3 - std::sqrt(5.0))) < 1e-5);
  CHECK(frequency_estimate(x, fw("11"), 100000) == 0);
  // Error well inside log N / N for several N.
  for (long long N : {1000LL, 10000LL, 100000LL}) {
    const double f = frequency_estimate(x, fw("1"), N).convert_to<double>();
    CHECK(std::abs(f - (std::sqrt(5.0) - 2)) * N <= 3 * std::log(static_cast<double>(N)));
  }
}

TEST_CASE("periodic words") {
  const auto y = periodic_sturmian(kPhi, 5, kZero);
  CHECK(y.period_word().to_string() == "01000");
  CHECK(y.sturmian_tagged());
  CHECK(periodic_sturmian(kPhi, 1, kZero).period_word().to_string() == "0");
  const PeriodicWord p(fw("110"), 1);
  const FiniteWord w = p.window(-4, 7);
  for (long long n = -4; n <= 7; ++n) CHECK(w.at(n) == p.symbol_at(n));
  CHECK(p.symbol_at(1) == 1);
  CHECK(p.symbol_at(3) == 0);
  CHECK(p.symbol_at(0) == 0);
  CHECK_THROWS_AS(PeriodicWord::tagged(fw("11"), 0, kPhi), std::invalid_argument);
  CHECK(PeriodicWord::tagged(fw("10001"), 0, kPhi).sturmian_tagged());

  // The tiled word reproduces the Sturmian window on [phase, phase + k).
  const Quad x0 = Quad::make(1, 1, 5, 5);
  const SturmianWord sx(kPhi, x0);
  const auto y7 = periodic_sturmian(kPhi, 7, x0, 3);
  for (int j = 0; j < 7; ++j) CHECK(y7.symbol_at(3 + j) == sx.symbol_at(j));
}

TEST_CASE("sturmian_factors enumerates exactly the observed factors") {
  const SturmianWord x(kPhi, kZero);
  const FiniteWord w = x.window(0, 200000);
  for (long long k : {1LL, 2LL, 5LL, 13LL, 31LL}) {
    const auto facs = sturmian_factors(kPhi, k);
    CHECK(facs.size() == static_cast<std::size_t>(k + 1));
    std::set<std::string> enumerated, observed;
    for (const auto& f : facs) enumerated.insert(f.word.to_string());
    for (std::size_t i = 0; i + k <= w.size(); ++i) observed.insert(w.slice(i, k).to_string());
    CHECK(enumerated == observed);
    for (const auto& f : facs) {
      CHECK(SturmianWord(kPhi, f.start).window(0, k - 1) == f.word);
    }
  }
}

TEST_CASE("cyclic autocorrelation") {
  std::mt19937_64 rng(8);
  for (std::size_t k : {1u, 2u, 7u, 64u, 65u, 130u}) {
    FiniteWord p(k);
    for (std::size_t i = 0; i < k; ++i) p.set(i, rng() % 2);
    const auto c = cyclic_autocorrelation(p);
    for (std::size_t r = 0; r < k; ++r) {
      long long brute = 0;
      for (std::size_t i = 0; i < k; ++i) brute += p[i] & p[(i + r) % k];
      CHECK(c[r] == brute);
    }
  }
}

TEST_CASE("fluctuation statistics") {
  const SturmianWord x(kPhi, kZero);
  const long long k = 17;
  const auto y = PeriodicWord(x.window(1, k), 1, true);
  const auto st = fluctuation_stats(x, y, fw("1"), k, -50, 49);
  CHECK(st.per_segment_deviation.size() == 100);
  CHECK(st.segment_length == k + 1);
  CHECK(st.max_deviation <= 2);
  CHECK(st.C == 2 * (st.max_deviation + 2));

  const auto self = fluctuation_stats(x, x, fw("101"), k, -10, 10);
  CHECK(self.max_deviation == 0);

  // Control: a random periodic word with a long period drifts away.
  std::mt19937_64 rng(21);
  FiniteWord noise(4000);
  for (std::size_t i = 0; i < noise.size(); ++i) noise.set(i, rng() % 4 == 0);
  const PeriodicWord rnd(noise);
  const auto ctrl = fluctuation_stats(x, rnd, fw("1"), 40, 0, 99);
  CHECK(ctrl.max_deviation > st.max_deviation);
}

TEST_CASE("all_words_up_to") {
  const auto w = all_words_up_to(3);
  CHECK(w.size() == 14);
  CHECK(w.front().to_string() == "0");
  CHECK(w[2].to_string() == "00");
  CHECK(w.back().to_string() == "111");
}
