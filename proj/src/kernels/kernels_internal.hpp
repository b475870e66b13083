#pragma once

#include "folia/kernels.hpp"

namespace folia::kernels {

// Defined in kernels_avx2.cpp; returns nullptr when the translation unit was
// built without AVX2 support.
const KernelSet* avx2_impl();

// Defined in kernels_neon.cpp; returns nullptr outside AArch64 builds.
const KernelSet* neon_impl();

}  // namespace folia::kernels
