#include "hilbert/infinite.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "hilbert/convolution.hpp"
#include "hilbert/errors.hpp"
#include "hilbert/rng.hpp"
#include "hilbert/tensor.hpp"

namespace hilbert {

double CertifiedNorm::upper() const {
  if (tail_bound == 0.0) return value;
  if (value == 0.0) return tail_bound;
  // (value^p + tail^p)^{1/p}, scaled to avoid overflow for large p.
  const double big = std::max(value, tail_bound);
  return big * std::pow(std::pow(value / big, p) + std::pow(tail_bound / big, p), 1.0 / p);
}

bool CertifiedNorm::contains(double v, double slack) const {
  return v >= value - slack && v <= upper() + slack;
}

double power_tail_bound(double q, std::size_t n) {
  if (!(q > 1.0)) throw DomainError("tail series diverges for exponent <= 1");
  if (n == 0) throw DomainError("truncation length must be >= 1");
  return std::pow(static_cast<double>(n), 1.0 - q) / (q - 1.0);
}

std::string_view to_string(InfiniteOp op) { return op == InfiniteOp::T ? "T" : "F"; }

SequenceVector apply_infinite(int m, const SequenceVector& x, std::size_t out_len) {
  if (m < 2) throw DomainError("order must be >= 2");
  if (out_len < 1) throw DomainError("output length must be >= 1");
  const std::size_t s = x.support();
  if (s == 0) return SequenceVector::zeros(out_len);
  const auto y = convolution_power(x.values().first(s), m - 1);
  const auto gen = GeneratingVector::hilbert(out_len + y.size() - 1);
  return SequenceVector(correlate(gen.values(), y, out_len));
}

namespace {

// Neumaier-compensated sum of |c_i|^p, smallest-index-last so the decaying
// tail is accumulated first.
double pow_sum(std::span<const double> c, double p) {
  double sum = 0.0, comp = 0.0;
  for (std::size_t k = c.size(); k-- > 0;) {
    const double a = std::fabs(c[k]);
    const double term = p == 2.0 ? a * a : std::pow(a, p);
    const double t = sum + term;
    comp += std::fabs(sum) >= std::fabs(term) ? (sum - t) + term : (term - t) + sum;
    sum = t;
  }
  return sum + comp;
}

double p_norm(std::span<const double> c, double p) {
  double big = 0.0;
  for (double v : c) big = std::max(big, std::fabs(v));
  if (big == 0.0) return 0.0;
  if (p == 2.0) return std::sqrt(pow_sum(c, 2.0));
  std::vector<double> scaled(c.begin(), c.end());
  for (double& v : scaled) v /= big;
  return big * std::pow(pow_sum(scaled, p), 1.0 / p);
}

void require_order(int m) {
  if (m < 2) throw DomainError("order must be >= 2");
}

}  // namespace

CertifiedNorm t_infinity(int m, const SequenceVector& x, double p, std::size_t out_len) {
  require_order(m);
  if (!(p > 1.0)) throw DomainError("T_inf maps into l^p only for p > 1");
  if (out_len < 1) throw DomainError("output length must be >= 1");
  CertifiedNorm out;
  out.p = p;
  out.truncation = out_len;
  if (x.is_zero()) return out;
  const SequenceVector y = apply_infinite(m, x, out_len).scaled(std::pow(x.norm1(), 2.0 - m));
  out.value = p_norm(y.values(), p);
  // |(T x)_i| <= ||x||_1 / i for every i.
  out.tail_bound = x.norm1() * std::pow(power_tail_bound(p, out_len), 1.0 / p);
  return out;
}

CertifiedNorm f_infinity(int m, const SequenceVector& x, double p, std::size_t out_len) {
  require_order(m);
  if (!(p > m - 1))
    throw DomainError("F_inf maps into l^p only for p > m-1 = " + std::to_string(m - 1));
  if (out_len < 1) throw DomainError("output length must be >= 1");
  CertifiedNorm out;
  out.p = p;
  out.truncation = out_len;
  if (x.is_zero()) return out;
  SequenceVector y = apply_infinite(m, x, out_len);
  if ((m - 1) % 2 == 0) {
    // An even power integrates to a nonnegative image; drop rounding noise.
    std::vector<double> c(y.data());
    for (double& v : c) v = std::max(v, 0.0);
    y = SequenceVector(std::move(c));
  }
  y = y.root(m - 1);
  out.value = p_norm(y.values(), p);
  // |(F x)_i| <= ||x||_1 i^{-1/(m-1)}.
  out.tail_bound = x.norm1() * std::pow(power_tail_bound(p / (m - 1), out_len), 1.0 / p);
  return out;
}

double t_operator_bound(double p) {
  if (!(p > 1.0)) throw DomainError("T_inf bound needs p > 1");
  return std::pow(std::riemann_zeta(p), 1.0 / p);
}

double f_operator_bound(int m, double p) {
  require_order(m);
  if (!(p > m - 1)) throw DomainError("F_inf bound needs p > m-1");
  return std::pow(std::riemann_zeta(p / (m - 1)), 1.0 / p);
}

namespace {

class Searcher {
 public:
  explicit Searcher(const NormSearchOptions& o) : opts_(o), rng_(o.seed) {
    rep_.op = o.op;
    rep_.m = o.m;
    rep_.p = o.p;
    rep_.bound = o.op == InfiniteOp::T ? t_operator_bound(o.p) : f_operator_bound(o.m, o.p);
  }

  CertifiedNorm evaluate(const SequenceVector& x, std::size_t len) {
    ++rep_.evaluations;
    CertifiedNorm c = opts_.op == InfiniteOp::T ? t_infinity(opts_.m, x, opts_.p, len)
                                                : f_infinity(opts_.m, x, opts_.p, len);
    rep_.max_value = std::max(rep_.max_value, c.value);
    rep_.max_upper = std::max(rep_.max_upper, c.upper());
    return c;
  }

  void offer(std::vector<double> v) {
    SequenceVector x(std::move(v));
    if (x.is_zero()) return;
    x = x.scaled(1.0 / x.norm1());
    const CertifiedNorm c = evaluate(x, opts_.search_len);
    if (!have_ || c.value > best_value_) {
      have_ = true;
      best_value_ = c.value;
      best_ = x;
    }
  }

  double draw() { return rng_.uniform(-1.0, 1.0); }

  NormSearchReport run() {
    const std::size_t s = opts_.support;
    for (std::size_t k = 1; k <= s; ++k) offer(SequenceVector::unit(s, k).data());
    for (double r : {0.05, 0.2, 0.5, 0.8}) {
      std::vector<double> v(s);
      for (std::size_t i = 0; i < s; ++i) v[i] = std::pow(r, static_cast<double>(i));
      offer(std::move(v));
    }
    for (double a : {1.0, 2.0, 4.0}) {
      std::vector<double> v(s);
      for (std::size_t i = 0; i < s; ++i) v[i] = std::pow(static_cast<double>(i + 1), -a);
      offer(std::move(v));
    }
    for (int t = 0; t < opts_.trials; ++t) {
      std::vector<double> v(s);
      for (double& e : v) e = draw();
      offer(std::move(v));
    }
    // Local moves: shift a random fraction of the mass from one coordinate to
    // another (or flip a sign), keeping the l^1 norm at 1.
    for (int t = 0; t < opts_.climb_steps && s > 1; ++t) {
      std::vector<double> v = best_.data();
      const std::size_t i = rng_.below(s), j = rng_.below(s);
      const double frac = rng_.uniform() * 0.5;
      const double moved = v[i] * frac;
      v[i] -= moved;
      v[j] += std::fabs(moved) * (v[j] < 0.0 ? -1.0 : 1.0);
      if (rng_.below(8) == 0) v[j] = -v[j];
      offer(std::move(v));
    }

    rep_.best_vector = best_;
    rep_.best = evaluate(best_, opts_.out_len);
    rep_.gap = rep_.bound - rep_.best.value;
    rep_.exceeded_bound = rep_.max_value > rep_.bound + 1e-9;
    return rep_;
  }

 private:
  const NormSearchOptions& opts_;
  SplitMix64 rng_;
  NormSearchReport rep_;
  SequenceVector best_;
  double best_value_ = 0.0;
  bool have_ = false;
};

}  // namespace

NormSearchReport norm_search(const NormSearchOptions& opts) {
  require_order(opts.m);
  if (opts.support < 1) throw DomainError("search support must be >= 1");
  if (opts.trials < 0 || opts.climb_steps < 0) throw DomainError("trial counts must be nonnegative");
  if (opts.search_len < 1 || opts.out_len < 1) throw DomainError("truncation lengths must be >= 1");
  return Searcher(opts).run();
}

}  // namespace hilbert
