#include <atomic>
#include <cstdlib>
#include <cstring>

#include "sturmlab/simd/kernels.hpp"

namespace sturmlab::simd {

#ifndef STURMLAB_HAVE_AVX2
const KernelTable* avx2_kernels() { return nullptr; }
#endif

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
  return false;
#endif
}

const char* isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

namespace {

const KernelTable& detect() {
  const char* env = std::getenv("STURMLAB_SIMD");
  if (env != nullptr && std::strcmp(env, "scalar") == 0) return scalar_kernels();
  const KernelTable* v = avx2_kernels();
  if (v != nullptr && cpu_has_avx2()) return *v;
  return scalar_kernels();
}

std::atomic<const KernelTable*> g_override{nullptr};

}  // namespace

const KernelTable& kernels() {
  static const KernelTable& chosen = detect();
  const KernelTable* o = g_override.load(std::memory_order_acquire);
  return o != nullptr ? *o : chosen;
}

void override_kernels(const KernelTable* table) {
  g_override.store(table, std::memory_order_release);
}

}  // namespace sturmlab::simd
