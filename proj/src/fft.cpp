#include "fft.hpp"

#include <fftw3.h>

#include <algorithm>
#include <complex>
#include <memory>
#include <mutex>

namespace hilbert::detail {
namespace {

// FFTW's planner is not reentrant; execution on distinct buffers is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

struct FftwFree {
  void operator()(void* p) const { fftw_free(p); }
};

template <class T>
using FftwBuffer = std::unique_ptr<T[], FftwFree>;

template <class T>
FftwBuffer<T> allocate(std::size_t n) {
  return FftwBuffer<T>(static_cast<T*>(fftw_malloc(sizeof(T) * n)));
}

class RealTransform {
 public:
  explicit RealTransform(std::size_t size)
      : size_(size), real_(allocate<double>(size)), spec_(allocate<fftw_complex>(size / 2 + 1)) {
    std::lock_guard lock(planner_mutex());
    const int n = static_cast<int>(size);
    forward_ = fftw_plan_dft_r2c_1d(n, real_.get(), spec_.get(), FFTW_ESTIMATE);
    backward_ = fftw_plan_dft_c2r_1d(n, spec_.get(), real_.get(), FFTW_ESTIMATE);
  }
  ~RealTransform() {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(forward_);
    fftw_destroy_plan(backward_);
  }
  RealTransform(const RealTransform&) = delete;
  RealTransform& operator=(const RealTransform&) = delete;

  std::size_t bins() const { return size_ / 2 + 1; }

  // Zero-padded forward transform of x into out.
  void forward(std::span<const double> x, std::vector<std::complex<double>>& out) {
    std::fill(real_.get(), real_.get() + size_, 0.0);
    std::copy(x.begin(), x.end(), real_.get());
    fftw_execute(forward_);
    out.resize(bins());
    for (std::size_t k = 0; k < bins(); ++k) out[k] = {spec_[k][0], spec_[k][1]};
  }

  // Normalized inverse; returns the first len samples.
  std::vector<double> inverse(const std::vector<std::complex<double>>& in, std::size_t len) {
    for (std::size_t k = 0; k < bins(); ++k) {
      spec_[k][0] = in[k].real();
      spec_[k][1] = in[k].imag();
    }
    fftw_execute(backward_);
    const double scale = 1.0 / static_cast<double>(size_);
    std::vector<double> out(len);
    for (std::size_t i = 0; i < len; ++i) out[i] = real_[i] * scale;
    return out;
  }

 private:
  std::size_t size_;
  FftwBuffer<double> real_;
  FftwBuffer<fftw_complex> spec_;
  fftw_plan forward_ = nullptr;
  fftw_plan backward_ = nullptr;
};

}  // namespace

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

std::vector<double> fft_convolve(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) return {};
  const std::size_t len = a.size() + b.size() - 1;
  RealTransform tr(std::max<std::size_t>(2, next_pow2(len)));
  std::vector<std::complex<double>> fa, fb;
  tr.forward(a, fa);
  tr.forward(b, fb);
  for (std::size_t k = 0; k < fa.size(); ++k) fa[k] *= fb[k];
  return tr.inverse(fa, len);
}

std::vector<double> fft_convolution_power(std::span<const double> x, int power) {
  if (x.empty()) return {};
  const std::size_t len = static_cast<std::size_t>(power) * (x.size() - 1) + 1;
  RealTransform tr(std::max<std::size_t>(2, next_pow2(len)));
  std::vector<std::complex<double>> fx;
  tr.forward(x, fx);
  for (auto& c : fx) {
    std::complex<double> r = c;
    for (int j = 1; j < power; ++j) r *= c;
    c = r;
  }
  return tr.inverse(fx, len);
}

}  // namespace hilbert::detail
