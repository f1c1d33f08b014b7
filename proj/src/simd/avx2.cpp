#include <immintrin.h>

#include <bit>

#include "sturmlab/simd/kernels.hpp"

namespace sturmlab::simd {

namespace {

std::uint64_t and_popcount_shifted_avx2(const std::uint64_t* bits, std::size_t nbits,
                                        std::size_t shift) {
  if (shift >= nbits) return 0;
  const std::size_t nwords = (nbits + 63) / 64;
  const std::size_t wshift = shift / 64;
  const unsigned bshift = static_cast<unsigned>(shift % 64);
  const std::size_t limit = (nbits - shift + 63) / 64;
  const __m256i sr = _mm256_set1_epi64x(bshift);
  const __m256i sl = _mm256_set1_epi64x(bshift == 0 ? 64 : 64 - bshift);

  std::uint64_t total = 0;
  std::size_t w = 0;
  // Vector body while both source words stay inside the array.
  for (; w + 4 <= limit && w + wshift + 5 <= nwords; w += 4) {
    const __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(bits + w));
    const __m256i lo = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(bits + w + wshift));
    const __m256i hi =
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(bits + w + wshift + 1));
    // Shift counts of 64 produce zero, which handles bshift == 0.
    const __m256i s = _mm256_or_si256(_mm256_srlv_epi64(lo, sr), _mm256_sllv_epi64(hi, sl));
    const __m256i v = _mm256_and_si256(a, s);
    total += static_cast<std::uint64_t>(std::popcount(static_cast<std::uint64_t>(_mm256_extract_epi64(v, 0))));
    total += static_cast<std::uint64_t>(std::popcount(static_cast<std::uint64_t>(_mm256_extract_epi64(v, 1))));
    total += static_cast<std::uint64_t>(std::popcount(static_cast<std::uint64_t>(_mm256_extract_epi64(v, 2))));
    total += static_cast<std::uint64_t>(std::popcount(static_cast<std::uint64_t>(_mm256_extract_epi64(v, 3))));
  }
  for (; w < limit; ++w) {
    const std::size_t src = w + wshift;
    std::uint64_t lo = src < nwords ? bits[src] : 0;
    std::uint64_t s = lo;
    if (bshift != 0) {
      std::uint64_t hi = src + 1 < nwords ? bits[src + 1] : 0;
      s = (lo >> bshift) | (hi << (64 - bshift));
    }
    total += static_cast<std::uint64_t>(std::popcount(bits[w] & s));
  }
  return total;
}

void accumulate_blocks_avx2(const double* src, std::size_t nblocks, std::size_t width,
                            double* acc) {
  std::size_t i = 0;
  for (; i + 4 <= width; i += 4) {
    __m256d a = _mm256_loadu_pd(acc + i);
    for (std::size_t b = 0; b < nblocks; ++b) a = _mm256_add_pd(a, _mm256_loadu_pd(src + b * width + i));
    _mm256_storeu_pd(acc + i, a);
  }
  for (; i < width; ++i) {
    double a = acc[i];
    for (std::size_t b = 0; b < nblocks; ++b) a += src[b * width + i];
    acc[i] = a;
  }
}

double masked_dot_avx2(const double* w, const std::uint8_t* mask, std::size_t n) {
  __m256d lane = _mm256_setzero_pd();
  const __m256i zero = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    std::uint32_t m4;
    __builtin_memcpy(&m4, mask + i, 4);
    const __m256i bytes = _mm256_cvtepu8_epi64(_mm_cvtsi32_si128(static_cast<int>(m4)));
    const __m256d keep = _mm256_castsi256_pd(_mm256_xor_si256(
        _mm256_cmpeq_epi64(bytes, zero), _mm256_set1_epi64x(-1)));
    lane = _mm256_add_pd(lane, _mm256_and_pd(_mm256_loadu_pd(w + i), keep));
  }
  alignas(32) double l[4];
  _mm256_store_pd(l, lane);
  for (int j = 0; i < n; ++i, ++j) l[j] += mask[i] ? w[i] : 0.0;
  return (l[0] + l[1]) + (l[2] + l[3]);
}

}  // namespace

const KernelTable* avx2_kernels() {
  static const KernelTable table{Isa::avx2, "avx2", and_popcount_shifted_avx2,
                                 accumulate_blocks_avx2, masked_dot_avx2};
  return &table;
}

}  // namespace sturmlab::simd
