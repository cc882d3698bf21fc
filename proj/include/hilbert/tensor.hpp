#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

#include "hilbert/errors.hpp"
#include "hilbert/sequence.hpp"

namespace hilbert {

// Hankel generating sequence: the entry of the tensor at index-sum offset s
// (0-based, s = i_1 + ... + i_m - m) is values()[s].
class GeneratingVector {
 public:
  // v_s = 1/(s+1), s = 0..length-1.
  static GeneratingVector hilbert(std::size_t length);
  // Arbitrary Hankel generator; must be nonempty.
  static GeneratingVector custom(std::vector<double> values);

  // Minimal length for an order-m, dimension-n tensor: m(n-1)+1.
  static std::size_t required_length(int order, std::size_t dim);

  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t s) const { return values_[s]; }
  std::span<const double> values() const { return values_; }
  // True for the 1/(s+1) sequence built by hilbert().
  bool is_hilbert() const { return hilbert_; }

 private:
  explicit GeneratingVector(std::vector<double> v) : values_(std::move(v)) {}
  std::vector<double> values_;
  bool hilbert_ = false;
};

// Symbolic order-m, dimension-n Hankel tensor; the Hilbert tensor unless a
// custom generator is supplied. Never materialized implicitly.
class HilbertTensor {
 public:
  HilbertTensor(int order, std::size_t dim);
  static HilbertTensor with_generator(int order, std::size_t dim, GeneratingVector gen);

  int order() const { return order_; }
  std::size_t dim() const { return dim_; }
  const GeneratingVector& generator() const { return *gen_; }

  // Sum of all n^m entries, from the generator and index-sum multiplicities.
  double entry_sum() const;

 private:
  HilbertTensor(int order, std::size_t dim, std::shared_ptr<const GeneratingVector> gen);

  int order_;
  std::size_t dim_;
  std::shared_ptr<const GeneratingVector> gen_;
};

inline constexpr std::size_t kDefaultElementBudget = 10'000'000;

// kDefaultElementBudget unless HILBERT_MAX_ELEMENTS is set.
std::size_t default_element_budget();

// Dense row-major m-way array (last index fastest).
struct DenseTensor {
  int order = 0;
  std::size_t dim = 0;
  std::vector<double> data;

  double operator()(std::span<const std::size_t> idx) const;  // 1-based
};

// 1-based index tuple of length m.
double entry(const HilbertTensor& t, std::span<const std::size_t> idx);

DenseTensor materialize_dense(const HilbertTensor& t,
                              std::size_t budget = default_element_budget());

// (H x^{m-1})_i as the literal (m-1)-fold sum. O(n^m).
SequenceVector apply_naive(const HilbertTensor& t, const SequenceVector& x);

// Same value via the Hankel structure: (m-1)-fold self-convolution of x
// correlated against the generator.
SequenceVector apply_fast(const HilbertTensor& t, const SequenceVector& x);

// Runs apply_fast over a batch; items are independent.
std::vector<SequenceVector> apply_fast_batch(const HilbertTensor& t,
                                             std::span<const SequenceVector> xs,
                                             unsigned threads = 0);

// H x^m = x . (H x^{m-1}).
double quadratic_form(const HilbertTensor& t, const SequenceVector& x);

enum class IntegralMode { floating, rational };

struct IntegralOptions {
  IntegralMode mode = IntegralMode::floating;
  // Rational mode refuses larger dimensions.
  std::size_t rational_max_dim = 12;
};

// H x^m as the integral over [0,1] of (sum_i x_i t^{i-1})^m, computed by
// exact polynomial expansion. Hilbert generator only. In rational mode the
// exact result is rounded once to double.
double quadratic_form_integral(const HilbertTensor& t, const SequenceVector& x,
                               const IntegralOptions& opts = {});

// Exact rational value; every double input is an exact dyadic rational.
mpq_class quadratic_form_integral_exact(const HilbertTensor& t, std::span<const double> x,
                                        const IntegralOptions& opts = {});
mpq_class quadratic_form_integral_exact(const HilbertTensor& t, std::span<const mpq_class> x,
                                        const IntegralOptions& opts = {});

}  // namespace hilbert
