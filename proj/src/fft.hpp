#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace hilbert::detail {

std::size_t next_pow2(std::size_t n);

std::vector<double> fft_convolve(std::span<const double> a, std::span<const double> b);
std::vector<double> fft_convolution_power(std::span<const double> x, int power);

}  // namespace hilbert::detail
