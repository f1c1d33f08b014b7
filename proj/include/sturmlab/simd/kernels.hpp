#pragma once

#include <cstddef>
#include <cstdint>

namespace sturmlab::simd {

enum class Isa { scalar, avx2 };

/// Hot loops shared by the census and density code. Each ISA variant returns
/// bit-identical results: integer kernels trivially, floating kernels by
/// fixing the per-lane summation order in the scalar reference.
struct KernelTable {
  Isa isa;
  const char* name;

  /// sum_i bit(i) & bit(i + shift) over 0 <= i, i + shift < nbits. `bits` holds
  /// nbits bits LSB-first, with the trailing bits of the last word zero.
  std::uint64_t (*and_popcount_shifted)(const std::uint64_t* bits, std::size_t nbits,
                                        std::size_t shift);

  /// acc[i] += src[b * width + i] for b = 0..nblocks-1, i = 0..width-1, with the
  /// additions into each acc[i] performed in increasing b.
  void (*accumulate_blocks)(const double* src, std::size_t nblocks, std::size_t width,
                            double* acc);

  /// sum_i (mask[i] ? w[i] : 0) with four interleaved partial sums (lane i % 4)
  /// combined as (l0 + l1) + (l2 + l3).
  double (*masked_dot)(const double* w, const std::uint8_t* mask, std::size_t n);
};

const KernelTable& scalar_kernels();
/// nullptr when the binary was built without AVX2 support.
const KernelTable* avx2_kernels();

bool cpu_has_avx2();

/// The table chosen at first use: AVX2 when compiled in and supported by the
/// CPU, unless STURMLAB_SIMD=scalar is set in the environment.
const KernelTable& kernels();
/// Forces a table for subsequent kernels() calls; nullptr restores detection.
void override_kernels(const KernelTable* table);

const char* isa_name(Isa isa);

}  // namespace sturmlab::simd
