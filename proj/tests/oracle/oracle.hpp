#pragma once

// Brute-force reference computations for tests. Nothing here calls into the
// tensor-core evaluation paths: entries are rebuilt from 1/(i_1+...+i_m-m+1)
// and every sum is an explicit loop.

#include <gmpxx.h>

#include <cstddef>
#include <vector>

#include "hilbert/sequence.hpp"
#include "hilbert/tensor.hpp"

namespace hilbert::oracle {

struct OracleConfig {
  std::size_t max_elements = 10'000'000;
  std::size_t grid_points = 100'000;
  int refinement_rounds = 80;
};

// (m-1)-nested loops over the inner indices.
SequenceVector brute_apply(const HilbertTensor& t, const SequenceVector& x, const OracleConfig& cfg = {});
std::vector<mpq_class> brute_apply_exact(int m, const std::vector<mpq_class>& x);

// Sum over all m-tuples, exactly.
mpq_class brute_form_exact(int m, const std::vector<mpq_class>& x);
mpq_class brute_form_exact(int m, const SequenceVector& x);

// Largest eigenvalue of the n x n Hilbert matrix (dense symmetric solver).
double hilbert_matrix_max_eigenvalue(std::size_t n);
// All eigenvalues, ascending.
std::vector<double> hilbert_matrix_eigenvalues(std::size_t n);

// Dense y = H_N x for the N x N Hilbert matrix (m = 2 action).
std::vector<double> hilbert_matrix_apply(std::size_t rows, const std::vector<double>& x);

enum class NormKind {
  l2,  // max H x^m over ||x||_2 = 1, all real x
  lm,  // max H x^m over ||x||_m = 1, x >= 0
};

// Grid search plus pattern refinement on the sphere; n <= 3.
double brute_max_sphere(const HilbertTensor& t, NormKind kind, const OracleConfig& cfg = {});

}  // namespace hilbert::oracle
