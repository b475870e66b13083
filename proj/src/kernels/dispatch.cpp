#include "folia/kernels.hpp"

#include "kernels_internal.hpp"

namespace folia::kernels {

const KernelSet* avx2() {
  static const KernelSet* resolved = []() -> const KernelSet* {
    const KernelSet* impl = avx2_impl();
    if (impl == nullptr) return nullptr;
#if defined(__x86_64__) || defined(__i386__)
    if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma"))
      return impl;
#endif
    return nullptr;
  }();
  return resolved;
}

const KernelSet* neon() { return neon_impl(); }

const KernelSet& active() {
  if (const KernelSet* a = avx2()) return *a;
  if (const KernelSet* n = neon()) return *n;
  return scalar();
}

}  // namespace folia::kernels
