#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "hilbert/sequence.hpp"

namespace hilbert {

// pi / sqrt(6) = sqrt(zeta(2)).
inline constexpr double kPiOverSqrt6 = 1.2825498301618640955;

inline constexpr std::size_t kDefaultTruncation = 100'000;

// p-norm of a truncated infinite sequence together with a rigorous bound on
// what the discarded components can add: the true norm lies in
// [value, (value^p + tail_bound^p)^{1/p}].
struct CertifiedNorm {
  double value = 0.0;
  double tail_bound = 0.0;
  double p = 2.0;
  std::size_t truncation = 0;

  double upper() const;
  bool contains(double v, double slack = 0.0) const;
};

// Integral comparison bound on sum_{i > n} i^{-q}, q > 1: n^{1-q} / (q-1).
double power_tail_bound(double q, std::size_t n);

// First out_len components of H_inf x^{m-1} for finitely supported x. Exact
// up to rounding, since only support(x) inner indices contribute.
SequenceVector apply_infinite(int m, const SequenceVector& x, std::size_t out_len);

// ||T_inf x||_p with T_inf x = ||x||_1^{2-m} H_inf x^{m-1}; p > 1.
CertifiedNorm t_infinity(int m, const SequenceVector& x, double p,
                         std::size_t out_len = kDefaultTruncation);

// ||F_inf x||_p with F_inf x = (H_inf x^{m-1})^{[1/(m-1)]}; p > m-1.
CertifiedNorm f_infinity(int m, const SequenceVector& x, double p,
                         std::size_t out_len = kDefaultTruncation);

// Operator-norm upper bounds from unit-l^1 inputs:
// T: zeta(p)^{1/p}; F: zeta(p/(m-1))^{1/p}. Both are attained at e_1. At the
// canonical exponents p = 2 and p = 2(m-1) they are pi/sqrt(6) and
// zeta(2)^{1/(2(m-1))} <= pi/sqrt(6).
double t_operator_bound(double p);
double f_operator_bound(int m, double p);

enum class InfiniteOp { T, F };

std::string_view to_string(InfiniteOp op);

struct NormSearchOptions {
  InfiniteOp op = InfiniteOp::T;
  int m = 2;
  double p = 2.0;
  int trials = 200;
  std::size_t support = 8;
  // Truncation used while climbing; lower bounds at a shorter truncation
  // remain lower bounds at a longer one.
  std::size_t search_len = 10'000;
  // Truncation for the final certificate of the incumbent.
  std::size_t out_len = kDefaultTruncation;
  int climb_steps = 200;
  std::uint64_t seed = 1;
};

struct NormSearchReport {
  InfiniteOp op = InfiniteOp::T;
  int m = 0;
  double p = 0.0;
  double bound = 0.0;
  CertifiedNorm best;
  SequenceVector best_vector;
  double gap = 0.0;  // bound - best.value
  int evaluations = 0;
  // Largest computed value (a lower bound on the true norm) and largest
  // certified upper end over all evaluations.
  double max_value = 0.0;
  double max_upper = 0.0;
  // Some input's lower bound beat the operator bound: a counterexample.
  bool exceeded_bound = false;
};

// Multi-start hill climbing over the unit l^1 sphere restricted to the given
// support: coordinate vectors, decaying profiles, random starts, then local
// mass transfers around the incumbent. Ties keep the earliest candidate.
NormSearchReport norm_search(const NormSearchOptions& opts);

}  // namespace hilbert
