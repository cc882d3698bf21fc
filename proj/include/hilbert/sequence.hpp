#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace hilbert {

// Finitely supported real vector, standing for an element of R^n or of l^1.
// Immutable once built; the 1- and 2-norms are computed at construction so
// instances can be shared across threads.
class SequenceVector {
 public:
  SequenceVector() = default;
  explicit SequenceVector(std::vector<double> entries);
  SequenceVector(std::initializer_list<double> entries);

  static SequenceVector zeros(std::size_t n);
  // e_k with 1-based k, length n.
  static SequenceVector unit(std::size_t n, std::size_t k);

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  double operator[](std::size_t i) const { return entries_[i]; }
  std::span<const double> values() const { return entries_; }
  const std::vector<double>& data() const { return entries_; }

  double norm1() const { return norm1_; }
  double norm2() const { return norm2_; }
  // General p-norm, p >= 1.
  double norm(double p) const;
  double norm_inf() const;

  bool is_zero() const { return norm1_ == 0.0; }
  bool is_nonnegative() const;
  // Index one past the last nonzero entry.
  std::size_t support() const;

  SequenceVector scaled(double c) const;
  // Entrywise real root with sign preservation; throws DomainError naming the
  // first negative entry when the root degree is even.
  SequenceVector root(int degree) const;
  // Entrywise power x_i^k for integer k >= 1.
  SequenceVector power(int k) const;
  // Copy extended (or truncated) to length n.
  SequenceVector resized(std::size_t n) const;

 private:
  std::vector<double> entries_;
  double norm1_ = 0.0;
  double norm2_ = 0.0;
};

// Real root of v of the given degree, preserving sign for odd degree.
double signed_root(double v, int degree);

}  // namespace hilbert
