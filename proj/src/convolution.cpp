#include "hilbert/convolution.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fft.hpp"
#include "hilbert/simd/kernels.hpp"

namespace hilbert {
namespace {

// Rough flop count of an FFT-based product of output length len.
double fft_cost(std::size_t len) {
  const double n = static_cast<double>(detail::next_pow2(len));
  return 8.0 * n * std::log2(std::max(n, 2.0)) + 2048.0;
}

}  // namespace

std::vector<double> convolve(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) return {};
  const std::size_t len = a.size() + b.size() - 1;
  const double direct = static_cast<double>(a.size()) * static_cast<double>(b.size());
  if (direct <= fft_cost(len)) {
    std::vector<double> out(len);
    simd::active_kernels().convolve(a.data(), a.size(), b.data(), b.size(), out.data());
    return out;
  }
  return detail::fft_convolve(a, b);
}

std::vector<double> convolution_power(std::span<const double> x, int power) {
  if (power < 1) throw std::invalid_argument("convolution power must be >= 1");
  if (x.empty()) return {};
  if (power == 1) return {x.begin(), x.end()};
  const std::size_t n = x.size();
  const std::size_t len = static_cast<std::size_t>(power) * (n - 1) + 1;
  // Repeated direct convolution costs about sum_k n * (k(n-1)+1).
  const double nn = static_cast<double>(n);
  const double direct = nn * nn * 0.5 * power * power;
  if (direct <= fft_cost(len)) {
    const auto& k = simd::active_kernels();
    std::vector<double> acc(x.begin(), x.end());
    std::vector<double> next;
    for (int j = 1; j < power; ++j) {
      next.resize(acc.size() + n - 1);
      k.convolve(acc.data(), acc.size(), x.data(), n, next.data());
      acc.swap(next);
    }
    return acc;
  }
  return detail::fft_convolution_power(x, power);
}

std::vector<double> correlate(std::span<const double> v, std::span<const double> y,
                              std::size_t out_len) {
  if (out_len == 0) return {};
  if (y.empty()) return std::vector<double>(out_len, 0.0);
  if (v.size() < out_len + y.size() - 1) throw std::invalid_argument("correlate: generator too short");
  const double direct = static_cast<double>(out_len) * static_cast<double>(y.size());
  const std::size_t window = out_len + y.size() - 1;
  if (direct <= fft_cost(window + y.size() - 1)) {
    std::vector<double> out(out_len);
    simd::active_kernels().correlate(v.data(), y.data(), y.size(), out.data(), out_len);
    return out;
  }
  // Correlation is convolution with the reversed kernel, offset by len(y)-1.
  std::vector<double> rev(y.rbegin(), y.rend());
  auto full = detail::fft_convolve(v.first(window), rev);
  return {full.begin() + static_cast<std::ptrdiff_t>(y.size() - 1),
          full.begin() + static_cast<std::ptrdiff_t>(y.size() - 1 + out_len)};
}

}  // namespace hilbert
