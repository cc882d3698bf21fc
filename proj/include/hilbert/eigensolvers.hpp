#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "hilbert/sequence.hpp"
#include "hilbert/tensor.hpp"

namespace hilbert {

enum class EigenKind { H, Z };

std::string_view to_string(EigenKind k);

struct SolverOptions {
  double tol = 1e-10;
  int max_iter = 10'000;
  // Starting vector; defaults to the normalized all-ones vector. Must be
  // entrywise positive for the H-solver.
  std::optional<SequenceVector> initial;
  // Z-solver shift. Defaults to (m-1) times the sum of all tensor entries,
  // which makes the shifted objective convex on the whole sphere.
  std::optional<double> shift;
  // Record the eigenvalue estimate after every iteration.
  bool record_trace = false;
};

// Largest H-eigenvalue (kind H) or Z-eigenvalue (kind Z) with its certificate.
//
// H: value = rho(F_n)^{m-1}; vector has unit m-norm and positive entries;
//    [lower, upper] are the Collatz-Wielandt bounds of the final iterate and
//    bracket value.
// Z: value = rho(T_n); vector has unit 2-norm; lower = upper = value.
// residual is eigen_residual() of the returned pair in both cases.
struct EigenResult {
  EigenKind kind = EigenKind::H;
  double value = 0.0;
  SequenceVector vector;
  double lower = 0.0;
  double upper = 0.0;
  double residual = 0.0;
  int iterations = 0;
  bool converged = false;
  std::vector<double> trace;

  double certificate_width() const { return upper - lower; }
};

// F_n x = (H x^{m-1})^{[1/(m-1)]}. Components of H x^{m-1} that are negative
// under an even root raise DomainError.
SequenceVector apply_F(const HilbertTensor& t, const SequenceVector& x);

// T_n x = ||x||_2^{2-m} H x^{m-1}; T_n(0) = 0.
SequenceVector apply_T(const HilbertTensor& t, const SequenceVector& x);

// Positive-tensor power method with Collatz-Wielandt bracketing.
EigenResult h_spectral_radius(const HilbertTensor& t, const SolverOptions& opts = {});

// Shifted symmetric higher-order power method.
EigenResult z_spectral_radius(const HilbertTensor& t, const SolverOptions& opts = {});

// H: ||H x^{m-1} - value x^{[m-1]}||_inf; Z: ||H x^{m-1} - value x||_2.
double eigen_residual(const HilbertTensor& t, const EigenResult& pair);
double eigen_residual(const HilbertTensor& t, EigenKind kind, double value, const SequenceVector& x);

// Default Z-solver shift for t.
double default_z_shift(const HilbertTensor& t);

}  // namespace hilbert
