#include "hilbert/sequence.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hilbert/errors.hpp"
#include "hilbert/simd/kernels.hpp"

namespace hilbert {

SequenceVector::SequenceVector(std::vector<double> entries) : entries_(std::move(entries)) {
  const auto& k = simd::active_kernels();
  norm1_ = k.sum_abs(entries_.data(), entries_.size());
  norm2_ = std::sqrt(k.sum_sq(entries_.data(), entries_.size()));
}

SequenceVector::SequenceVector(std::initializer_list<double> entries)
    : SequenceVector(std::vector<double>(entries)) {}

SequenceVector SequenceVector::zeros(std::size_t n) { return SequenceVector(std::vector<double>(n, 0.0)); }

SequenceVector SequenceVector::unit(std::size_t n, std::size_t k) {
  if (k < 1 || k > n) throw DomainError("unit vector index " + std::to_string(k) + " outside 1.." + std::to_string(n));
  std::vector<double> v(n, 0.0);
  v[k - 1] = 1.0;
  return SequenceVector(std::move(v));
}

double SequenceVector::norm(double p) const {
  if (!(p >= 1.0)) throw DomainError("p-norm requires p >= 1");
  if (p == 1.0) return norm1_;
  if (p == 2.0) return norm2_;
  // Scale by the max entry so large p does not underflow.
  const double big = norm_inf();
  if (big == 0.0) return 0.0;
  double acc = 0.0;
  for (double v : entries_) acc += std::pow(std::fabs(v) / big, p);
  return big * std::pow(acc, 1.0 / p);
}

double SequenceVector::norm_inf() const {
  double m = 0.0;
  for (double v : entries_) m = std::max(m, std::fabs(v));
  return m;
}

bool SequenceVector::is_nonnegative() const {
  return std::all_of(entries_.begin(), entries_.end(), [](double v) { return v >= 0.0; });
}

std::size_t SequenceVector::support() const {
  std::size_t s = entries_.size();
  while (s > 0 && entries_[s - 1] == 0.0) --s;
  return s;
}

SequenceVector SequenceVector::scaled(double c) const {
  std::vector<double> v(entries_);
  for (double& e : v) e *= c;
  return SequenceVector(std::move(v));
}

double signed_root(double v, int degree) {
  if (degree == 1) return v;
  if (degree == 2) return std::sqrt(v);
  if (degree == 3) return std::cbrt(v);
  const double r = std::pow(std::fabs(v), 1.0 / degree);
  return v < 0.0 ? -r : r;
}

SequenceVector SequenceVector::root(int degree) const {
  if (degree < 1) throw DomainError("root degree must be >= 1");
  std::vector<double> v(entries_);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (degree % 2 == 0 && v[i] < 0.0)
      throw DomainError("even root of negative component at index " + std::to_string(i + 1));
    v[i] = signed_root(v[i], degree);
  }
  return SequenceVector(std::move(v));
}

SequenceVector SequenceVector::power(int k) const {
  if (k < 1) throw DomainError("power must be >= 1");
  std::vector<double> v(entries_);
  for (double& e : v) {
    double r = e;
    for (int j = 1; j < k; ++j) r *= e;
    e = r;
  }
  return SequenceVector(std::move(v));
}

SequenceVector SequenceVector::resized(std::size_t n) const {
  std::vector<double> v(entries_);
  v.resize(n, 0.0);
  return SequenceVector(std::move(v));
}

}  // namespace hilbert
