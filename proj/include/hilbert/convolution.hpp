#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace hilbert {

// Linear convolution; picks direct or FFT evaluation by estimated cost.
std::vector<double> convolve(std::span<const double> a, std::span<const double> b);

// power-fold self-convolution of x (power >= 1); length power*(len-1)+1.
std::vector<double> convolution_power(std::span<const double> x, int power);

// out[i] = sum_s v[i+s] * y[s] for i < out_len; v.size() >= out_len + y.size() - 1.
std::vector<double> correlate(std::span<const double> v, std::span<const double> y,
                              std::size_t out_len);

}  // namespace hilbert
