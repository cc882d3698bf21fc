#include "hilbert/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <future>
#include <limits>
#include <string>
#include <thread>

#include "hilbert/convolution.hpp"
#include "hilbert/simd/kernels.hpp"

namespace hilbert {

GeneratingVector GeneratingVector::hilbert(std::size_t length) {
  if (length == 0) throw DomainError("generating vector must be nonempty");
  std::vector<double> v(length);
  for (std::size_t s = 0; s < length; ++s) v[s] = 1.0 / static_cast<double>(s + 1);
  GeneratingVector g(std::move(v));
  g.hilbert_ = true;
  return g;
}

GeneratingVector GeneratingVector::custom(std::vector<double> values) {
  if (values.empty()) throw DomainError("generating vector must be nonempty");
  for (double v : values)
    if (!std::isfinite(v)) throw DomainError("generating vector entries must be finite");
  return GeneratingVector(std::move(values));
}

std::size_t GeneratingVector::required_length(int order, std::size_t dim) {
  return static_cast<std::size_t>(order) * (dim - 1) + 1;
}

HilbertTensor::HilbertTensor(int order, std::size_t dim)
    : order_(order), dim_(dim) {
  if (order < 2) throw DomainError("tensor order must be >= 2, got " + std::to_string(order));
  if (dim < 1) throw DomainError("tensor dimension must be >= 1");
  gen_ = std::make_shared<const GeneratingVector>(
      GeneratingVector::hilbert(GeneratingVector::required_length(order, dim)));
}

HilbertTensor::HilbertTensor(int order, std::size_t dim, std::shared_ptr<const GeneratingVector> gen)
    : order_(order), dim_(dim), gen_(std::move(gen)) {}

HilbertTensor HilbertTensor::with_generator(int order, std::size_t dim, GeneratingVector gen) {
  if (order < 2) throw DomainError("tensor order must be >= 2, got " + std::to_string(order));
  if (dim < 1) throw DomainError("tensor dimension must be >= 1");
  if (gen.size() < GeneratingVector::required_length(order, dim))
    throw DomainError("generating vector shorter than m(n-1)+1");
  return HilbertTensor(order, dim, std::make_shared<const GeneratingVector>(std::move(gen)));
}

double HilbertTensor::entry_sum() const {
  // Multiplicity of index-sum offset s is the coefficient of t^s in
  // (1 + t + ... + t^{n-1})^m.
  const std::vector<double> ones(dim_, 1.0);
  const auto counts = convolution_power(ones, order_);
  double total = 0.0;
  for (std::size_t s = 0; s < counts.size(); ++s) total += std::round(counts[s]) * (*gen_)[s];
  return total;
}

std::size_t default_element_budget() {
  if (const char* env = std::getenv("HILBERT_MAX_ELEMENTS")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultElementBudget;
}

namespace {

std::size_t checked_offset(const HilbertTensor& t, std::span<const std::size_t> idx) {
  if (idx.size() != static_cast<std::size_t>(t.order()))
    throw DomainError("index tuple has length " + std::to_string(idx.size()) + ", expected " +
                      std::to_string(t.order()));
  std::size_t s = 0;
  for (std::size_t k : idx) {
    if (k < 1 || k > t.dim())
      throw DomainError("index " + std::to_string(k) + " outside 1.." + std::to_string(t.dim()));
    s += k - 1;
  }
  return s;
}

void require_dim(const HilbertTensor& t, const SequenceVector& x) {
  if (x.size() != t.dim())
    throw DomainError("vector length " + std::to_string(x.size()) + " does not match dimension " +
                      std::to_string(t.dim()));
}

// n^k, or nullopt-like max on overflow.
std::size_t checked_pow(std::size_t n, int k) {
  std::size_t r = 1;
  for (int j = 0; j < k; ++j) {
    if (r > std::numeric_limits<std::size_t>::max() / n) return std::numeric_limits<std::size_t>::max();
    r *= n;
  }
  return r;
}

}  // namespace

double DenseTensor::operator()(std::span<const std::size_t> idx) const {
  std::size_t flat = 0;
  for (std::size_t k : idx) flat = flat * dim + (k - 1);
  return data[flat];
}

double entry(const HilbertTensor& t, std::span<const std::size_t> idx) {
  return t.generator()[checked_offset(t, idx)];
}

DenseTensor materialize_dense(const HilbertTensor& t, std::size_t budget) {
  const std::size_t n = t.dim();
  const int m = t.order();
  const std::size_t total = checked_pow(n, m);
  if (total > budget)
    throw ResourceError("dense tensor needs " + std::to_string(n) + "^" + std::to_string(m) +
                        " elements, budget is " + std::to_string(budget));
  DenseTensor out{m, n, std::vector<double>(total)};
  std::vector<std::size_t> idx(static_cast<std::size_t>(m), 0);
  for (std::size_t flat = 0; flat < total; ++flat) {
    std::size_t s = 0;
    for (std::size_t k : idx) s += k;
    out.data[flat] = t.generator()[s];
    for (int pos = m - 1; pos >= 0; --pos) {
      if (++idx[static_cast<std::size_t>(pos)] < n) break;
      idx[static_cast<std::size_t>(pos)] = 0;
    }
  }
  return out;
}

SequenceVector apply_naive(const HilbertTensor& t, const SequenceVector& x) {
  require_dim(t, x);
  const std::size_t n = t.dim();
  const std::size_t inner = static_cast<std::size_t>(t.order() - 1);
  const auto& gen = t.generator();
  std::vector<double> out(n, 0.0);
  std::vector<std::size_t> idx(inner);
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(idx.begin(), idx.end(), 0);
    double acc = 0.0;
    while (true) {
      double prod = 1.0;
      std::size_t s = i;
      for (std::size_t k : idx) {
        prod *= x[k];
        s += k;
      }
      acc += prod * gen[s];
      bool done = true;
      for (std::size_t pos = inner; pos-- > 0;) {
        if (++idx[pos] < n) {
          done = false;
          break;
        }
        idx[pos] = 0;
      }
      if (done) break;
    }
    out[i] = acc;
  }
  return SequenceVector(std::move(out));
}

SequenceVector apply_fast(const HilbertTensor& t, const SequenceVector& x) {
  require_dim(t, x);
  const auto y = convolution_power(x.values(), t.order() - 1);
  return SequenceVector(correlate(t.generator().values(), y, t.dim()));
}

std::vector<SequenceVector> apply_fast_batch(const HilbertTensor& t,
                                             std::span<const SequenceVector> xs,
                                             unsigned threads) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  std::vector<SequenceVector> out(xs.size());
  if (threads == 1 || xs.size() < 2) {
    for (std::size_t i = 0; i < xs.size(); ++i) out[i] = apply_fast(t, xs[i]);
    return out;
  }
  std::vector<std::future<void>> jobs;
  const std::size_t chunk = (xs.size() + threads - 1) / threads;
  for (std::size_t lo = 0; lo < xs.size(); lo += chunk) {
    const std::size_t hi = std::min(xs.size(), lo + chunk);
    jobs.push_back(std::async(std::launch::async, [&, lo, hi] {
      for (std::size_t i = lo; i < hi; ++i) out[i] = apply_fast(t, xs[i]);
    }));
  }
  for (auto& j : jobs) j.get();
  return out;
}

double quadratic_form(const HilbertTensor& t, const SequenceVector& x) {
  const auto y = apply_fast(t, x);
  return simd::active_kernels().dot(x.values().data(), y.values().data(), x.size());
}

namespace {

// Integral over [0,1] of p(t)^m where p has coefficients x (constant term
// first). Plain loops: this is the independent check on the fast path.
template <class T>
T polynomial_power_integral(std::span<const T> x, int m) {
  std::vector<T> acc(x.begin(), x.end());
  for (int j = 1; j < m; ++j) {
    std::vector<T> next(acc.size() + x.size() - 1, T(0));
    for (std::size_t a = 0; a < acc.size(); ++a)
      for (std::size_t b = 0; b < x.size(); ++b) next[a + b] += acc[a] * x[b];
    acc = std::move(next);
  }
  T total(0);
  for (std::size_t k = 0; k < acc.size(); ++k) total += acc[k] / T(static_cast<long>(k + 1));
  return total;
}

void require_integral_form(const HilbertTensor& t, std::size_t len) {
  if (!t.generator().is_hilbert())
    throw DomainError("integral representation only holds for the Hilbert generator");
  if (len != t.dim())
    throw DomainError("vector length " + std::to_string(len) + " does not match dimension " +
                      std::to_string(t.dim()));
}

void require_rational_budget(const HilbertTensor& t, const IntegralOptions& opts) {
  if (t.dim() > opts.rational_max_dim)
    throw ResourceError("rational mode limited to n <= " + std::to_string(opts.rational_max_dim));
}

}  // namespace

double quadratic_form_integral(const HilbertTensor& t, const SequenceVector& x,
                               const IntegralOptions& opts) {
  require_integral_form(t, x.size());
  if (opts.mode == IntegralMode::rational)
    return quadratic_form_integral_exact(t, x.values(), opts).get_d();
  return polynomial_power_integral<double>(x.values(), t.order());
}

mpq_class quadratic_form_integral_exact(const HilbertTensor& t, std::span<const double> x,
                                        const IntegralOptions& opts) {
  std::vector<mpq_class> q(x.begin(), x.end());
  return quadratic_form_integral_exact(t, q, opts);
}

mpq_class quadratic_form_integral_exact(const HilbertTensor& t, std::span<const mpq_class> x,
                                        const IntegralOptions& opts) {
  require_integral_form(t, x.size());
  require_rational_budget(t, opts);
  mpq_class r = polynomial_power_integral<mpq_class>(x, t.order());
  r.canonicalize();
  return r;
}

}  // namespace hilbert
