#include "sturmlab/words/stats.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "sturmlab/simd/kernels.hpp"

namespace sturmlab::words {

std::int64_t pattern_count(const FiniteWord& w, const FiniteWord& p) {
  if (p.empty()) throw std::invalid_argument("pattern_count: empty pattern");
  if (p.size() > w.size()) return 0;
  const std::size_t m = p.size();
  const std::size_t last = w.size() - m;
  std::int64_t n = 0;
  if (m <= 64) {
    const std::uint64_t target = p.extract(0, m);
    for (std::size_t i = 0; i <= last; ++i) n += w.extract(i, m) == target;
    return n;
  }
  for (std::size_t i = 0; i <= last; ++i) n += w.slice(i, m) == p;
  return n;
}

std::int64_t cyclic_pattern_count(const FiniteWord& period, const FiniteWord& p) {
  if (p.empty()) throw std::invalid_argument("cyclic_pattern_count: empty pattern");
  const std::size_t k = period.size();
  // Unroll enough copies to hold every start position of one period.
  const std::size_t len = k + p.size() - 1;
  FiniteWord ext(len);
  for (std::size_t i = 0; i < len; ++i) ext.set(i, period[i % k]);
  return pattern_count(ext, p);
}

std::int64_t factor_complexity(const Word& w, std::int64_t L, std::int64_t N) {
  if (L < 1) throw std::invalid_argument("factor_complexity: L must be >= 1");
  const FiniteWord win = w.window(0, N);
  if (static_cast<std::int64_t>(win.size()) < L) return 0;
  const std::size_t m = static_cast<std::size_t>(L);
  const std::size_t last = win.size() - m;
  if (m <= 64) {
    std::unordered_set<std::uint64_t> seen;
    for (std::size_t i = 0; i <= last; ++i) seen.insert(win.extract(i, m));
    return static_cast<std::int64_t>(seen.size());
  }
  std::set<std::string> seen;
  for (std::size_t i = 0; i <= last; ++i) seen.insert(win.slice(i, m).to_string());
  return static_cast<std::int64_t>(seen.size());
}

Rational frequency_estimate(const Word& w, const FiniteWord& p, std::int64_t N) {
  if (N < static_cast<std::int64_t>(p.size())) {
    throw std::invalid_argument("frequency_estimate: N must be >= |p|");
  }
  const FiniteWord win = w.window(0, N - 1);
  return Rational(pattern_count(win, p), N - static_cast<std::int64_t>(p.size()) + 1);
}

FluctuationStats fluctuation_stats(const Word& x, const Word& y, const FiniteWord& p,
                                   std::int64_t k, std::int64_t s_first, std::int64_t s_last) {
  if (k < 1 || s_last < s_first) throw std::invalid_argument("fluctuation_stats: bad range");
  FluctuationStats st;
  st.pattern = p;
  st.segment_length = k + 1;
  st.s_first = s_first;
  const FiniteWord xw = x.window(s_first * k, (s_last + 1) * k);
  const FiniteWord yw = y.window(s_first * k, (s_last + 1) * k);
  for (std::int64_t s = s_first; s <= s_last; ++s) {
    const std::size_t off = static_cast<std::size_t>((s - s_first) * k);
    const std::size_t len = static_cast<std::size_t>(k + 1);
    const std::int64_t dev = pattern_count(xw.slice(off, len), p) - pattern_count(yw.slice(off, len), p);
    st.per_segment_deviation.push_back(dev);
    st.max_deviation = std::max(st.max_deviation, dev < 0 ? -dev : dev);
  }
  st.C = 2 * (st.max_deviation + 2 * static_cast<std::int64_t>(p.size()));
  return st;
}

std::int64_t fluctuation_constant(const std::vector<FluctuationStats>& stats) {
  std::int64_t c = 0;
  for (const auto& s : stats) c = std::max(c, s.C);
  return c;
}

std::vector<FiniteWord> all_words_up_to(std::size_t max_len) {
  std::vector<FiniteWord> out;
  for (std::size_t len = 1; len <= max_len; ++len) {
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << len); ++v) {
      FiniteWord w(len);
      // Most significant bit first, so the order is lexicographic.
      for (std::size_t i = 0; i < len; ++i) w.set(i, static_cast<int>((v >> (len - 1 - i)) & 1u));
      out.push_back(std::move(w));
    }
  }
  return out;
}

std::vector<std::int64_t> cyclic_autocorrelation(const FiniteWord& period) {
  const std::size_t k = period.size();
  FiniteWord doubled(2 * k);
  for (std::size_t i = 0; i < 2 * k; ++i) doubled.set(i, period[i % k]);
  const auto& kern = simd::kernels();
  std::vector<std::int64_t> c(k, 0);
  for (std::size_t r = 0; r < k; ++r) {
    // Shifted pairs in the doubled copy are the cyclic pairs (start i < k) plus
    // the linear pairs of one period (start i >= k).
    const auto all = kern.and_popcount_shifted(doubled.bits().data(), 2 * k, r);
    const auto lin = kern.and_popcount_shifted(period.bits().data(), k, r);
    c[r] = static_cast<std::int64_t>(all - lin);
  }
  return c;
}

}  // namespace sturmlab::words
