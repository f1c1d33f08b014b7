#pragma once

#include <cstdint>
#include <vector>

#include "sturmlab/bigint.hpp"
#include "sturmlab/words/finite_word.hpp"
#include "sturmlab/words/rotation.hpp"

namespace sturmlab::words {

/// Occurrences of p fully inside w, counted by left endpoint (overlaps count).
std::int64_t pattern_count(const FiniteWord& w, const FiniteWord& p);

/// Occurrences of p starting at each position of one period of the bi-infinite
/// periodic extension of `period`.
std::int64_t cyclic_pattern_count(const FiniteWord& period, const FiniteWord& p);

/// Distinct length-L factors of w([0, N]).
std::int64_t factor_complexity(const Word& w, std::int64_t L, std::int64_t N);

/// pattern_count(w([0, N-1]), p) / (N - |p| + 1).
Rational frequency_estimate(const Word& w, const FiniteWord& p, std::int64_t N);

struct FluctuationStats {
  FiniteWord pattern;
  std::vector<std::int64_t> per_segment_deviation;  // n_p(X seg) - n_p(Y seg)
  std::int64_t max_deviation = 0;                   // D
  std::int64_t segment_length = 0;                  // k + 1 (closed segment [sk, (s+1)k])
  std::int64_t s_first = 0;
  std::int64_t C = 0;                               // 2 (D + 2|p|)
};

/// Per-segment deviations of pattern counts between x and y on [sk, (s+1)k],
/// s_first <= s <= s_last.
FluctuationStats fluctuation_stats(const Word& x, const Word& y, const FiniteWord& p,
                                   std::int64_t k, std::int64_t s_first, std::int64_t s_last);

/// 2 * max_i (D_i + 2|p_i|) over a list of per-pattern statistics.
std::int64_t fluctuation_constant(const std::vector<FluctuationStats>& stats);

/// All 0/1 words of length 1..max_len in length-then-lexicographic order.
std::vector<FiniteWord> all_words_up_to(std::size_t max_len);

/// Cyclic autocorrelation c(r) = #{i : w_i = w_{(i+r) mod k} = 1}, r = 0..k-1.
std::vector<std::int64_t> cyclic_autocorrelation(const FiniteWord& period);

}  // namespace sturmlab::words
