#include <arm_neon.h>

#include <algorithm>
#include <cmath>

#include "hilbert/simd/kernels.hpp"
#include "kernels_internal.hpp"

namespace hilbert::simd {
namespace {

double dot(const double* a, const double* b, std::size_t n) {
  float64x2_t s0 = vdupq_n_f64(0.0);
  float64x2_t s1 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    s0 = vfmaq_f64(s0, vld1q_f64(a + i), vld1q_f64(b + i));
    s1 = vfmaq_f64(s1, vld1q_f64(a + i + 2), vld1q_f64(b + i + 2));
  }
  double acc = vaddvq_f64(vaddq_f64(s0, s1));
  for (; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

double sum_abs(const double* a, std::size_t n) {
  float64x2_t s0 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) s0 = vaddq_f64(s0, vabsq_f64(vld1q_f64(a + i)));
  double acc = vaddvq_f64(s0);
  for (; i < n; ++i) acc += std::fabs(a[i]);
  return acc;
}

double sum_sq(const double* a, std::size_t n) { return dot(a, a, n); }

void axpy(double alpha, const double* x, double* y, std::size_t n) {
  const float64x2_t va = vdupq_n_f64(alpha);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) vst1q_f64(y + i, vfmaq_f64(vld1q_f64(y + i), va, vld1q_f64(x + i)));
  for (; i < n; ++i) y[i] += alpha * x[i];
}

void correlate(const double* v, const double* y, std::size_t ylen, double* out,
               std::size_t out_len) {
  std::size_t i = 0;
  for (; i + 8 <= out_len; i += 8) {
    float64x2_t a0 = vdupq_n_f64(0.0), a1 = vdupq_n_f64(0.0);
    float64x2_t a2 = vdupq_n_f64(0.0), a3 = vdupq_n_f64(0.0);
    const double* w = v + i;
    for (std::size_t s = 0; s < ylen; ++s) {
      const float64x2_t ys = vdupq_n_f64(y[s]);
      a0 = vfmaq_f64(a0, vld1q_f64(w + s), ys);
      a1 = vfmaq_f64(a1, vld1q_f64(w + s + 2), ys);
      a2 = vfmaq_f64(a2, vld1q_f64(w + s + 4), ys);
      a3 = vfmaq_f64(a3, vld1q_f64(w + s + 6), ys);
    }
    vst1q_f64(out + i, a0);
    vst1q_f64(out + i + 2, a1);
    vst1q_f64(out + i + 4, a2);
    vst1q_f64(out + i + 6, a3);
  }
  for (; i < out_len; ++i) out[i] = dot(v + i, y, ylen);
}

void convolve(const double* a, std::size_t na, const double* b, std::size_t nb,
              double* out) {
  if (na == 0 || nb == 0) return;
  std::fill(out, out + na + nb - 1, 0.0);
  if (na > nb) {
    std::swap(a, b);
    std::swap(na, nb);
  }
  for (std::size_t j = 0; j < na; ++j) axpy(a[j], b, out + j, nb);
}

}  // namespace

const KernelTable* neon_kernels_impl() {
  static const KernelTable table{"neon", dot, sum_abs, sum_sq, axpy, correlate, convolve};
  return &table;
}

}  // namespace hilbert::simd
