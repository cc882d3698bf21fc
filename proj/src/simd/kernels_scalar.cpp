#include "hilbert/simd/kernels.hpp"

#include <algorithm>
#include <cmath>

namespace hilbert::simd {
namespace {

double dot(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

double sum_abs(const double* a, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += std::fabs(a[i]);
  return acc;
}

double sum_sq(const double* a, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * a[i];
  return acc;
}

void axpy(double alpha, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void correlate(const double* v, const double* y, std::size_t ylen, double* out,
               std::size_t out_len) {
  for (std::size_t i = 0; i < out_len; ++i) {
    double acc = 0.0;
    for (std::size_t s = 0; s < ylen; ++s) acc += v[i + s] * y[s];
    out[i] = acc;
  }
}

void convolve(const double* a, std::size_t na, const double* b, std::size_t nb,
              double* out) {
  if (na == 0 || nb == 0) return;
  std::fill(out, out + na + nb - 1, 0.0);
  for (std::size_t j = 0; j < na; ++j) {
    const double aj = a[j];
    for (std::size_t k = 0; k < nb; ++k) out[j + k] += aj * b[k];
  }
}

}  // namespace

const KernelTable& scalar_kernels() {
  static const KernelTable table{"scalar", dot, sum_abs, sum_sq, axpy, correlate, convolve};
  return table;
}

}  // namespace hilbert::simd
