#pragma once

// Data-parallel inner loops used by the fast apply path, the eigensolvers and
// the infinite-dimensional operators. Every kernel has a scalar reference
// implementation; vectorized variants (AVX2+FMA on x86-64, NEON on aarch64)
// are selected once at runtime and must agree with the reference up to
// reassociation of floating-point sums.

#include <cstddef>
#include <string_view>
#include <vector>

namespace hilbert::simd {

struct KernelTable {
  std::string_view isa;

  // sum_i a[i] * b[i]
  double (*dot)(const double* a, const double* b, std::size_t n);

  // sum_i |a[i]|
  double (*sum_abs)(const double* a, std::size_t n);

  // sum_i a[i]^2
  double (*sum_sq)(const double* a, std::size_t n);

  // y[i] += alpha * x[i]
  void (*axpy)(double alpha, const double* x, double* y, std::size_t n);

  // out[i] = sum_{s < ylen} v[i + s] * y[s], for i < out_len.
  // v must hold at least out_len + ylen - 1 values.
  void (*correlate)(const double* v, const double* y, std::size_t ylen,
                    double* out, std::size_t out_len);

  // out[k] = sum_j a[j] * b[k - j]; out holds na + nb - 1 values and is
  // overwritten.
  void (*convolve)(const double* a, std::size_t na, const double* b,
                   std::size_t nb, double* out);
};

const KernelTable& scalar_kernels();

// nullptr when the variant was not compiled in or the CPU lacks support.
const KernelTable* avx2_kernels();
const KernelTable* neon_kernels();

// Best available table. HILBERT_SIMD=scalar in the environment forces the
// reference kernels.
const KernelTable& active_kernels();

// Every table usable on this machine, reference first.
std::vector<const KernelTable*> available_kernels();

}  // namespace hilbert::simd
