#include "hilbert/eigensolvers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "hilbert/simd/kernels.hpp"

namespace hilbert {

std::string_view to_string(EigenKind k) { return k == EigenKind::H ? "H" : "Z"; }

SequenceVector apply_F(const HilbertTensor& t, const SequenceVector& x) {
  return apply_fast(t, x).root(t.order() - 1);
}

SequenceVector apply_T(const HilbertTensor& t, const SequenceVector& x) {
  if (x.is_zero()) return SequenceVector::zeros(x.size());
  return apply_fast(t, x).scaled(std::pow(x.norm2(), 2.0 - t.order()));
}

double default_z_shift(const HilbertTensor& t) { return (t.order() - 1) * t.entry_sum(); }

namespace {

void validate(const HilbertTensor& t, const SolverOptions& opts) {
  if (!(opts.tol > 0.0)) throw DomainError("solver tolerance must be positive");
  if (opts.max_iter < 1) throw DomainError("max_iter must be >= 1");
  if (opts.initial && opts.initial->size() != t.dim())
    throw DomainError("initial vector length does not match dimension");
}

SequenceVector start_vector(const HilbertTensor& t, const SolverOptions& opts) {
  if (opts.initial) return *opts.initial;
  return SequenceVector(std::vector<double>(t.dim(), 1.0));
}

struct Bracket {
  double lower;
  double upper;
};

// Collatz-Wielandt ratios y_i / x_i^{m-1} over a positive x.
Bracket collatz_wielandt(const SequenceVector& x, const SequenceVector& y, int m) {
  Bracket b{std::numeric_limits<double>::infinity(), 0.0};
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] / std::pow(x[i], m - 1);
    b.lower = std::min(b.lower, r);
    b.upper = std::max(b.upper, r);
  }
  return b;
}

}  // namespace

EigenResult h_spectral_radius(const HilbertTensor& t, const SolverOptions& opts) {
  validate(t, opts);
  const int m = t.order();
  SequenceVector x = start_vector(t, opts);
  for (double v : x.values())
    if (!(v > 0.0)) throw DomainError("H-solver needs an entrywise positive start vector");
  x = x.scaled(1.0 / x.norm(m));

  EigenResult res;
  res.kind = EigenKind::H;
  const auto& k = simd::active_kernels();
  for (int it = 1; it <= opts.max_iter; ++it) {
    const SequenceVector y = apply_fast(t, x);
    const Bracket b = collatz_wielandt(x, y, m);
    // With ||x||_m = 1 the Rayleigh value is a weighted mean of the ratios.
    const double rayleigh = k.dot(x.values().data(), y.values().data(), x.size());
    res.value = std::clamp(rayleigh, b.lower, b.upper);
    res.lower = b.lower;
    res.upper = b.upper;
    res.vector = x;
    res.iterations = it;
    if (opts.record_trace) res.trace.push_back(res.value);
    if (b.upper - b.lower <= opts.tol) {
      res.converged = true;
      break;
    }
    const SequenceVector z = y.root(m - 1);
    x = z.scaled(1.0 / z.norm(m));
  }
  res.residual = eigen_residual(t, res);
  return res;
}

EigenResult z_spectral_radius(const HilbertTensor& t, const SolverOptions& opts) {
  validate(t, opts);
  const int m = t.order();
  const double alpha = opts.shift.value_or(default_z_shift(t));
  if (!(alpha >= 0.0)) throw DomainError("Z-solver shift must be nonnegative");
  SequenceVector x = start_vector(t, opts);
  if (x.is_zero()) throw DomainError("Z-solver start vector must be nonzero");
  x = x.scaled(1.0 / x.norm2());

  EigenResult res;
  res.kind = EigenKind::Z;
  const auto& k = simd::active_kernels();
  const std::size_t n = t.dim();
  for (int it = 1; it <= opts.max_iter; ++it) {
    SequenceVector g = apply_fast(t, x);
    double mu = k.dot(x.values().data(), g.values().data(), n);
    if (mu < 0.0 && m % 2 == 1) {
      // Odd order: H(-x)^m = -H x^m while H(-x)^{m-1} = H x^{m-1}, so
      // continue from the reflected point with the same g.
      x = x.scaled(-1.0);
      mu = -mu;
    }
    std::vector<double> r(g.data());
    k.axpy(-mu, x.values().data(), r.data(), n);
    const double residual = std::sqrt(k.sum_sq(r.data(), n));
    res.value = mu;
    res.vector = x;
    res.iterations = it;
    res.residual = residual;
    if (opts.record_trace) res.trace.push_back(mu);
    if (residual <= opts.tol) {
      res.converged = true;
      break;
    }
    std::vector<double> z(g.data());
    k.axpy(alpha, x.values().data(), z.data(), n);
    SequenceVector zs(std::move(z));
    x = zs.scaled(1.0 / zs.norm2());
  }
  res.lower = res.upper = res.value;
  return res;
}

double eigen_residual(const HilbertTensor& t, EigenKind kind, double value, const SequenceVector& x) {
  const SequenceVector y = apply_fast(t, x);
  if (kind == EigenKind::H) {
    const SequenceVector xp = x.power(t.order() - 1);
    double worst = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) worst = std::max(worst, std::fabs(y[i] - value * xp[i]));
    return worst;
  }
  std::vector<double> r(y.data());
  simd::active_kernels().axpy(-value, x.values().data(), r.data(), r.size());
  return std::sqrt(simd::active_kernels().sum_sq(r.data(), r.size()));
}

double eigen_residual(const HilbertTensor& t, const EigenResult& pair) {
  return eigen_residual(t, pair.kind, pair.value, pair.vector);
}

}  // namespace hilbert
