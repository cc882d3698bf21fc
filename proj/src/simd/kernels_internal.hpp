#pragma once

#include "hilbert/simd/kernels.hpp"

namespace hilbert::simd {

#if HILBERT_HAVE_AVX2
const KernelTable* avx2_kernels_impl();
#endif
#if HILBERT_HAVE_NEON
const KernelTable* neon_kernels_impl();
#endif

}  // namespace hilbert::simd
