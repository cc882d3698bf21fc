#pragma once

#include <cstdint>
#include <vector>

#include "hilbert/eigensolvers.hpp"
#include "hilbert/sequence.hpp"
#include "hilbert/tensor.hpp"

namespace hilbert {

// n^{m-1} sin(pi/n) and n^{m/2} sin(pi/n): upper bounds on the largest H- and
// Z-eigenvalue of the order-m, dimension-n Hilbert tensor (n >= 2).
double h_radius_bound(int m, std::size_t n);
double z_radius_bound(int m, std::size_t n);

// Slack added on top of the solver certificate before a bound is declared
// violated.
inline constexpr double kBoundSlack = 1e-8;

struct PositiveDefiniteReport {
  int m = 0;
  std::size_t n = 0;
  int trials = 0;
  // Smallest integral-form value over the random trials.
  double min_value = 0.0;
  // Smallest H x^m / ||x||_2^m over the random trials.
  double min_unit_sphere = 0.0;
  bool all_positive = true;
  // Structured near-degenerate inputs, evaluated exactly when n <= 12.
  int adversarial_count = 0;
  double adversarial_min = 0.0;
  double adversarial_min_normalized = 0.0;
  bool adversarial_exact = false;
  bool adversarial_positive = true;
};

// Inputs built to make the even-order form small: alternating decaying
// entries (-1)^i / i, e_1, coefficients of (1-t)^{n-1}, and of the shifted
// Legendre polynomial of degree n-1.
std::vector<SequenceVector> adversarial_vectors(std::size_t n);

// Requires even order.
PositiveDefiniteReport check_positive_definite(const HilbertTensor& t, int trials, std::uint64_t seed);

struct InequalityReport {
  std::size_t n = 0;
  int trials = 0;
  double constant = 0.0;  // n sin(pi/n)
  // max over tested x of sum_{ij} |x_i||x_j|/(i+j-1) / (constant ||x||_2^2)
  double worst_ratio = 0.0;
  SequenceVector worst_vector;
  bool holds = true;
};

// Random trials plus the all-ones vector and the Perron vector of the
// Hilbert matrix, which maximizes the left-hand side on the sphere.
InequalityReport hilbert_inequality_check(std::size_t n, int trials, std::uint64_t seed);

struct BoundReport {
  int m = 0;
  std::size_t n = 0;
  double rho_h = 0.0;
  double rho_z = 0.0;
  double bound_h = 0.0;
  double bound_z = 0.0;
  double slack_h = 0.0;
  double slack_z = 0.0;
  bool certified = false;
  EigenResult h;
  EigenResult z;

  bool violates_h() const;
  bool violates_z() const;
  bool violated() const { return violates_h() || violates_z(); }
};

// Every n must be >= 2. Rows are returned in the order of dims.
std::vector<BoundReport> bound_sweep(int m, const std::vector<std::size_t>& dims,
                                     const SolverOptions& opts = {}, bool parallel = true);

struct MonotonicityReport {
  int m = 0;
  std::vector<std::size_t> dims;
  std::vector<double> rho_h_seq;  // largest H-eigenvalue
  std::vector<double> rho_f_seq;  // rho(F_n) = rho_h^{1/(m-1)}
  std::vector<double> rho_z_seq;
  std::vector<bool> converged;
  std::vector<SequenceVector> h_vectors;
  std::vector<SequenceVector> z_vectors;
  bool strict_h = false;
  bool nondecreasing_z = false;
  double tol = 0.0;
  // For each consecutive pair (n, k): the H-eigenvector of H_n padded with
  // zeros to length k, tested against H_k with eigenvalue rho_h(n).
  // Full residual over all k rows, and over the leading n rows only.
  std::vector<double> embedding_residual;
  std::vector<double> embedding_residual_leading;

  bool certified() const;
};

// dims strictly ascending, each >= 1.
MonotonicityReport monotonicity_sweep(int m, const std::vector<std::size_t>& dims,
                                      const SolverOptions& opts = {}, bool parallel = true);

}  // namespace hilbert
