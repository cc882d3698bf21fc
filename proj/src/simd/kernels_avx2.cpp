#include <immintrin.h>

#include <algorithm>
#include <cmath>

#include "hilbert/simd/kernels.hpp"
#include "kernels_internal.hpp"

namespace hilbert::simd {
namespace {

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  __m128d sh = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_add_sd(lo, sh));
}

double dot(const double* a, const double* b, std::size_t n) {
  __m256d s0 = _mm256_setzero_pd();
  __m256d s1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    s0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), s0);
    s1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4), s1);
  }
  for (; i + 4 <= n; i += 4)
    s0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), s0);
  double acc = hsum(_mm256_add_pd(s0, s1));
  for (; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

double sum_abs(const double* a, std::size_t n) {
  const __m256d mask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));
  __m256d s0 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) s0 = _mm256_add_pd(s0, _mm256_and_pd(_mm256_loadu_pd(a + i), mask));
  double acc = hsum(s0);
  for (; i < n; ++i) acc += std::fabs(a[i]);
  return acc;
}

double sum_sq(const double* a, std::size_t n) { return dot(a, a, n); }

void axpy(double alpha, const double* x, double* y, std::size_t n) {
  const __m256d va = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(y + i, _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
  for (; i < n; ++i) y[i] += alpha * x[i];
}

// Vectorized over output positions: each register holds four consecutive
// outputs, and the shifted window of v is streamed past a broadcast y[s].
void correlate(const double* v, const double* y, std::size_t ylen, double* out,
               std::size_t out_len) {
  std::size_t i = 0;
  for (; i + 16 <= out_len; i += 16) {
    __m256d a0 = _mm256_setzero_pd(), a1 = _mm256_setzero_pd();
    __m256d a2 = _mm256_setzero_pd(), a3 = _mm256_setzero_pd();
    const double* w = v + i;
    for (std::size_t s = 0; s < ylen; ++s) {
      const __m256d ys = _mm256_broadcast_sd(y + s);
      a0 = _mm256_fmadd_pd(_mm256_loadu_pd(w + s), ys, a0);
      a1 = _mm256_fmadd_pd(_mm256_loadu_pd(w + s + 4), ys, a1);
      a2 = _mm256_fmadd_pd(_mm256_loadu_pd(w + s + 8), ys, a2);
      a3 = _mm256_fmadd_pd(_mm256_loadu_pd(w + s + 12), ys, a3);
    }
    _mm256_storeu_pd(out + i, a0);
    _mm256_storeu_pd(out + i + 4, a1);
    _mm256_storeu_pd(out + i + 8, a2);
    _mm256_storeu_pd(out + i + 12, a3);
  }
  for (; i + 4 <= out_len; i += 4) {
    __m256d a0 = _mm256_setzero_pd();
    for (std::size_t s = 0; s < ylen; ++s)
      a0 = _mm256_fmadd_pd(_mm256_loadu_pd(v + i + s), _mm256_broadcast_sd(y + s), a0);
    _mm256_storeu_pd(out + i, a0);
  }
  for (; i < out_len; ++i) out[i] = dot(v + i, y, ylen);
}

void convolve(const double* a, std::size_t na, const double* b, std::size_t nb,
              double* out) {
  if (na == 0 || nb == 0) return;
  std::fill(out, out + na + nb - 1, 0.0);
  // Iterate over the shorter operand so the axpy runs are long.
  if (na > nb) {
    std::swap(a, b);
    std::swap(na, nb);
  }
  for (std::size_t j = 0; j < na; ++j) axpy(a[j], b, out + j, nb);
}

bool cpu_has_avx2_fma() {
#if defined(__GNUC__)
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

}  // namespace

const KernelTable* avx2_kernels_impl() {
  static const KernelTable table{"avx2", dot, sum_abs, sum_sq, axpy, correlate, convolve};
  static const bool supported = cpu_has_avx2_fma();
  return supported ? &table : nullptr;
}

}  // namespace hilbert::simd
