#include "hilbert/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <numbers>
#include <string>

#include "hilbert/rng.hpp"

namespace hilbert {

double h_radius_bound(int m, std::size_t n) {
  const double nd = static_cast<double>(n);
  return std::pow(nd, m - 1) * std::sin(std::numbers::pi / nd);
}

double z_radius_bound(int m, std::size_t n) {
  const double nd = static_cast<double>(n);
  return std::pow(nd, 0.5 * m) * std::sin(std::numbers::pi / nd);
}

namespace {

double binomial(int n, int k) {
  double r = 1.0;
  for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return std::round(r);
}

SequenceVector random_nonzero(std::size_t n, SplitMix64& rng) {
  while (true) {
    std::vector<double> v(n);
    for (double& e : v) e = rng.uniform(-1.0, 1.0);
    SequenceVector x(std::move(v));
    if (!x.is_zero()) return x;
  }
}

}  // namespace

std::vector<SequenceVector> adversarial_vectors(std::size_t n) {
  std::vector<SequenceVector> out;
  std::vector<double> alt(n);
  for (std::size_t i = 0; i < n; ++i) alt[i] = (i % 2 == 0 ? -1.0 : 1.0) / static_cast<double>(i + 1);
  out.emplace_back(std::move(alt));
  out.push_back(SequenceVector::unit(n, 1));
  if (n >= 2) {
    const int k = static_cast<int>(n) - 1;
    std::vector<double> binom(n), legendre(n);
    for (int j = 0; j <= k; ++j) {
      binom[static_cast<std::size_t>(j)] = (j % 2 ? -1.0 : 1.0) * binomial(k, j);
      legendre[static_cast<std::size_t>(j)] = ((k + j) % 2 ? -1.0 : 1.0) * binomial(k, j) * binomial(k + j, j);
    }
    out.emplace_back(std::move(binom));
    out.emplace_back(std::move(legendre));
  }
  return out;
}

PositiveDefiniteReport check_positive_definite(const HilbertTensor& t, int trials, std::uint64_t seed) {
  const int m = t.order();
  if (m % 2 != 0)
    throw DomainError("positive definiteness is only meaningful for even order, got m=" + std::to_string(m));
  if (trials < 0) throw DomainError("trials must be nonnegative");
  PositiveDefiniteReport rep;
  rep.m = m;
  rep.n = t.dim();
  rep.trials = trials;
  rep.min_value = std::numeric_limits<double>::infinity();
  rep.min_unit_sphere = std::numeric_limits<double>::infinity();

  SplitMix64 rng(seed);
  for (int k = 0; k < trials; ++k) {
    const SequenceVector x = random_nonzero(t.dim(), rng);
    const double v = quadratic_form_integral(t, x);
    rep.min_value = std::min(rep.min_value, v);
    rep.min_unit_sphere = std::min(rep.min_unit_sphere, quadratic_form(t, x) / std::pow(x.norm2(), m));
    if (!(v > 0.0)) rep.all_positive = false;
  }

  const auto adv = adversarial_vectors(t.dim());
  rep.adversarial_count = static_cast<int>(adv.size());
  rep.adversarial_exact = t.dim() <= IntegralOptions{}.rational_max_dim;
  rep.adversarial_min = std::numeric_limits<double>::infinity();
  rep.adversarial_min_normalized = std::numeric_limits<double>::infinity();
  const mpq_class floor_exact(mpz_class(1), mpz_class("1000000000000000000000000000000"));
  for (const auto& x : adv) {
    double v = 0.0;
    if (rep.adversarial_exact) {
      const mpq_class q = quadratic_form_integral_exact(t, x.values());
      if (!(q > floor_exact)) rep.adversarial_positive = false;
      v = q.get_d();
    } else {
      v = quadratic_form_integral(t, x);
      if (!(v > 0.0)) rep.adversarial_positive = false;
    }
    rep.adversarial_min = std::min(rep.adversarial_min, v);
    rep.adversarial_min_normalized = std::min(rep.adversarial_min_normalized, v / std::pow(x.norm2(), m));
  }
  return rep;
}

InequalityReport hilbert_inequality_check(std::size_t n, int trials, std::uint64_t seed) {
  if (n < 2) throw DomainError("Hilbert inequality check needs n >= 2");
  InequalityReport rep;
  rep.n = n;
  rep.trials = trials;
  rep.constant = static_cast<double>(n) * std::sin(std::numbers::pi / static_cast<double>(n));

  auto ratio = [&](const SequenceVector& x) {
    double lhs = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        lhs += std::fabs(x[i]) * std::fabs(x[j]) / static_cast<double>(i + j + 1);
    return lhs / (rep.constant * x.norm2() * x.norm2());
  };
  auto consider = [&](const SequenceVector& x) {
    const double r = ratio(x);
    if (r > rep.worst_ratio) {
      rep.worst_ratio = r;
      rep.worst_vector = x;
    }
  };

  SplitMix64 rng(seed);
  for (int k = 0; k < trials; ++k) consider(random_nonzero(n, rng));
  consider(SequenceVector(std::vector<double>(n, 1.0)));
  consider(h_spectral_radius(HilbertTensor(2, n)).vector);
  rep.holds = rep.worst_ratio <= 1.0 + 1e-12;
  return rep;
}

bool BoundReport::violates_h() const {
  return certified && rho_h > bound_h + h.certificate_width() + kBoundSlack;
}

bool BoundReport::violates_z() const {
  return certified && rho_z > bound_z + z.residual + kBoundSlack;
}

namespace {

BoundReport bound_row(int m, std::size_t n, const SolverOptions& opts) {
  const HilbertTensor t(m, n);
  BoundReport r;
  r.m = m;
  r.n = n;
  r.h = h_spectral_radius(t, opts);
  r.z = z_spectral_radius(t, opts);
  r.rho_h = r.h.value;
  r.rho_z = r.z.value;
  r.bound_h = h_radius_bound(m, n);
  r.bound_z = z_radius_bound(m, n);
  r.slack_h = r.bound_h - r.rho_h;
  r.slack_z = r.bound_z - r.rho_z;
  r.certified = r.h.converged && r.z.converged;
  return r;
}

template <class Fn>
auto map_dims(const std::vector<std::size_t>& dims, bool parallel, Fn fn) {
  using Row = decltype(fn(std::size_t{}));
  std::vector<Row> rows;
  rows.reserve(dims.size());
  if (!parallel) {
    for (std::size_t n : dims) rows.push_back(fn(n));
    return rows;
  }
  std::vector<std::future<Row>> jobs;
  for (std::size_t n : dims) jobs.push_back(std::async(std::launch::async, fn, n));
  for (auto& j : jobs) rows.push_back(j.get());
  return rows;
}

}  // namespace

std::vector<BoundReport> bound_sweep(int m, const std::vector<std::size_t>& dims,
                                     const SolverOptions& opts, bool parallel) {
  if (m < 2) throw DomainError("order must be >= 2");
  for (std::size_t n : dims)
    if (n < 2) throw DomainError("spectral radius bounds need n >= 2 (sin(pi/n) = 0 at n = 1)");
  return map_dims(dims, parallel, [&](std::size_t n) { return bound_row(m, n, opts); });
}

bool MonotonicityReport::certified() const {
  return std::all_of(converged.begin(), converged.end(), [](bool c) { return c; });
}

MonotonicityReport monotonicity_sweep(int m, const std::vector<std::size_t>& dims,
                                      const SolverOptions& opts, bool parallel) {
  if (m < 2) throw DomainError("order must be >= 2");
  if (dims.empty()) throw DomainError("dimension list is empty");
  for (std::size_t j = 0; j < dims.size(); ++j) {
    if (dims[j] < 1) throw DomainError("dimensions must be >= 1");
    if (j > 0 && dims[j] <= dims[j - 1]) throw DomainError("dimension list must be strictly ascending");
  }

  struct Pair {
    EigenResult h, z;
  };
  const auto pairs = map_dims(dims, parallel, [&](std::size_t n) {
    const HilbertTensor t(m, n);
    return Pair{h_spectral_radius(t, opts), z_spectral_radius(t, opts)};
  });

  MonotonicityReport rep;
  rep.m = m;
  rep.dims = dims;
  rep.tol = opts.tol;
  for (const auto& p : pairs) {
    rep.rho_h_seq.push_back(p.h.value);
    rep.rho_f_seq.push_back(std::pow(p.h.value, 1.0 / (m - 1)));
    rep.rho_z_seq.push_back(p.z.value);
    rep.converged.push_back(p.h.converged && p.z.converged);
    rep.h_vectors.push_back(p.h.vector);
    rep.z_vectors.push_back(p.z.vector);
  }
  rep.strict_h = true;
  rep.nondecreasing_z = true;
  for (std::size_t j = 1; j < dims.size(); ++j) {
    if (!(rep.rho_f_seq[j] - rep.rho_f_seq[j - 1] > opts.tol)) rep.strict_h = false;
    if (rep.rho_z_seq[j] < rep.rho_z_seq[j - 1] - 2.0 * opts.tol) rep.nondecreasing_z = false;

    const HilbertTensor big(m, dims[j]);
    const SequenceVector padded = rep.h_vectors[j - 1].resized(dims[j]);
    const SequenceVector y = apply_fast(big, padded);
    const SequenceVector xp = padded.power(m - 1);
    double full = 0.0, leading = 0.0;
    for (std::size_t i = 0; i < dims[j]; ++i) {
      const double r = std::fabs(y[i] - rep.rho_h_seq[j - 1] * xp[i]);
      full = std::max(full, r);
      if (i < dims[j - 1]) leading = std::max(leading, r);
    }
    rep.embedding_residual.push_back(full);
    rep.embedding_residual_leading.push_back(leading);
  }
  return rep;
}

}  // namespace hilbert
