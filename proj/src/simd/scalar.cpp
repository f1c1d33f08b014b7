#include <bit>

#include "sturmlab/simd/kernels.hpp"

namespace sturmlab::simd {

namespace {

inline std::uint64_t shifted_word(const std::uint64_t* bits, std::size_t nwords, std::size_t w,
                                  std::size_t wshift, unsigned bshift) {
  const std::size_t src = w + wshift;
  std::uint64_t lo = src < nwords ? bits[src] : 0;
  if (bshift == 0) return lo;
  std::uint64_t hi = src + 1 < nwords ? bits[src + 1] : 0;
  return (lo >> bshift) | (hi << (64 - bshift));
}

std::uint64_t and_popcount_shifted_scalar(const std::uint64_t* bits, std::size_t nbits,
                                          std::size_t shift) {
  if (shift >= nbits) return 0;
  const std::size_t nwords = (nbits + 63) / 64;
  const std::size_t wshift = shift / 64;
  const unsigned bshift = static_cast<unsigned>(shift % 64);
  const std::size_t limit = (nbits - shift + 63) / 64;
  std::uint64_t total = 0;
  for (std::size_t w = 0; w < limit; ++w) {
    total += static_cast<std::uint64_t>(
        std::popcount(bits[w] & shifted_word(bits, nwords, w, wshift, bshift)));
  }
  return total;
}

void accumulate_blocks_scalar(const double* src, std::size_t nblocks, std::size_t width,
                              double* acc) {
  for (std::size_t b = 0; b < nblocks; ++b) {
    const double* row = src + b * width;
    for (std::size_t i = 0; i < width; ++i) acc[i] += row[i];
  }
}

double masked_dot_scalar(const double* w, const std::uint8_t* mask, std::size_t n) {
  double lane[4] = {0.0, 0.0, 0.0, 0.0};
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    for (int j = 0; j < 4; ++j) lane[j] += mask[i + j] ? w[i + j] : 0.0;
  }
  for (int j = 0; i < n; ++i, ++j) lane[j] += mask[i] ? w[i] : 0.0;
  return (lane[0] + lane[1]) + (lane[2] + lane[3]);
}

}  // namespace

const KernelTable& scalar_kernels() {
  static const KernelTable table{Isa::scalar, "scalar", and_popcount_shifted_scalar,
                                 accumulate_blocks_scalar, masked_dot_scalar};
  return table;
}

}  // namespace sturmlab::simd
