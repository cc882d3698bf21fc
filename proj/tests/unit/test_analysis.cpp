#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "hilbert/analysis.hpp"
#include "oracle.hpp"

using namespace hilbert;

TEST_CASE("positive definiteness examples") {
  const auto r = check_positive_definite(HilbertTensor(2, 3), 10, 1);
  CHECK(r.all_positive);
  CHECK(r.min_value > 0.0);
  CHECK(r.trials == 10);
  CHECK(check_positive_definite(HilbertTensor(4, 1), 5, 2).min_value > 0.0);
  CHECK_THROWS_AS(check_positive_definite(HilbertTensor(3, 2), 10, 1), DomainError);
}

TEST_CASE("positive definiteness across even orders") {
  for (int m : {2, 4, 6})
    for (std::size_t n : {2u, 5u, 10u}) {
      const auto r = check_positive_definite(HilbertTensor(m, n), 500, 77);
      CAPTURE(m);
      CAPTURE(n);
      CHECK(r.all_positive);
      CHECK(r.min_unit_sphere > 0.0);
      CHECK(r.adversarial_count == 4);
      CHECK(r.adversarial_exact);
      CHECK(r.adversarial_positive);
      CHECK(r.adversarial_min > 0.0);
    }
}

TEST_CASE("adversarial inputs have their documented shape") {
  const auto v = adversarial_vectors(4);
  REQUIRE(v.size() == 4);
  CHECK(v[0].data() == std::vector<double>{-1.0, 0.5, -1.0 / 3.0, 0.25});
  CHECK(v[1].data() == std::vector<double>{1, 0, 0, 0});
  CHECK(v[2].data() == std::vector<double>{1, -3, 3, -1});
  // Shifted Legendre P_3(2t-1) = -1 + 12t - 30t^2 + 20t^3.
  CHECK(v[3].data() == std::vector<double>{-1, 12, -30, 20});
  // The Legendre input is orthogonal to all lower powers, so its quadratic
  // form equals the exact value 1/(2*3+1) = 1/7.
  CHECK(oracle::brute_form_exact(2, v[3]) == mpq_class(1, 7));
}

TEST_CASE("Hilbert inequality examples") {
  const auto r = hilbert_inequality_check(2, 100, 0);
  CHECK(r.holds);
  CHECK(r.constant == doctest::Approx(2.0));
  CHECK(r.worst_ratio <= 1.0);
  CHECK_THROWS_AS(hilbert_inequality_check(1, 10, 0), DomainError);
}

TEST_CASE("Hilbert inequality holds with the sharp finite constant") {
  for (std::size_t n = 2; n <= 40; n += 3) {
    const auto r = hilbert_inequality_check(n, 200, n);
    CAPTURE(n);
    CHECK(r.holds);
    CHECK(r.constant == doctest::Approx(n * std::sin(std::numbers::pi / n)));
    // The Perron vector attains lambda_max(H_n) / (n sin(pi/n)).
    if (n <= 10)
      CHECK(r.worst_ratio == doctest::Approx(oracle::hilbert_matrix_max_eigenvalue(n) / r.constant).epsilon(1e-9));
  }
}

TEST_CASE("bound formulas") {
  CHECK(h_radius_bound(2, 2) == doctest::Approx(2.0));
  CHECK(z_radius_bound(2, 2) == doctest::Approx(2.0));
  CHECK(h_radius_bound(3, 4) == doctest::Approx(16.0 * std::sin(std::numbers::pi / 4)));
  CHECK(z_radius_bound(3, 4) == doctest::Approx(8.0 * std::sin(std::numbers::pi / 4)));
}

TEST_CASE("bound sweep examples") {
  const auto rows = bound_sweep(2, {2});
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].rho_h == doctest::Approx(1.2675918792439982).epsilon(1e-9));
  CHECK(rows[0].bound_h == doctest::Approx(2.0));
  CHECK_FALSE(rows[0].violated());
  CHECK(rows[0].certified);
  CHECK_THROWS_AS(bound_sweep(3, {1, 2}), DomainError);
}

TEST_CASE("bound sweep finds no violations") {
  SolverOptions o;
  o.max_iter = 1'000'000;
  for (int m = 2; m <= 6; ++m) {
    std::vector<std::size_t> dims;
    for (std::size_t n = 2; n <= 12; ++n) dims.push_back(n);
    const auto rows = bound_sweep(m, dims, o);
    REQUIRE(rows.size() == dims.size());
    for (std::size_t k = 0; k < rows.size(); ++k) {
      const auto& r = rows[k];
      CAPTURE(m);
      CAPTURE(r.n);
      CHECK(r.n == dims[k]);
      CHECK(r.certified);
      CHECK_FALSE(r.violated());
      CHECK(r.rho_h <= r.bound_h);
      CHECK(r.rho_z <= r.bound_z);
      CHECK(r.slack_h == doctest::Approx(r.bound_h - r.rho_h));
    }
  }
}

TEST_CASE("parallel and sequential sweeps agree exactly") {
  const std::vector<std::size_t> dims{2, 5, 9, 13};
  const auto a = bound_sweep(4, dims, {}, true);
  const auto b = bound_sweep(4, dims, {}, false);
  for (std::size_t k = 0; k < dims.size(); ++k) {
    CHECK(a[k].rho_h == b[k].rho_h);
    CHECK(a[k].rho_z == b[k].rho_z);
  }
}

TEST_CASE("monotonicity examples") {
  const auto r = monotonicity_sweep(2, {1, 2});
  REQUIRE(r.rho_h_seq.size() == 2);
  CHECK(r.rho_h_seq[0] == doctest::Approx(1.0));
  CHECK(r.rho_h_seq[1] == doctest::Approx(1.2675918792439982).epsilon(1e-9));
  CHECK(r.strict_h);
  CHECK_THROWS_AS(monotonicity_sweep(3, {3, 3}), DomainError);
  CHECK_THROWS_AS(monotonicity_sweep(3, {4, 2}), DomainError);
  CHECK_THROWS_AS(monotonicity_sweep(3, {0, 2}), DomainError);
}

TEST_CASE("spectral radii increase strictly with dimension") {
  SolverOptions o;
  o.max_iter = 1'000'000;
  for (int m = 2; m <= 6; ++m) {
    std::vector<std::size_t> dims;
    for (std::size_t n = 1; n <= 12; ++n) dims.push_back(n);
    const auto r = monotonicity_sweep(m, dims, o);
    CHECK(r.certified());
    CAPTURE(m);
    CHECK(r.strict_h);
    CHECK(r.nondecreasing_z);
    for (std::size_t k = 1; k < dims.size(); ++k) {
      CHECK(r.rho_h_seq[k] - r.rho_h_seq[k - 1] > r.tol);
      CHECK(r.rho_f_seq[k] == doctest::Approx(std::pow(r.rho_h_seq[k], 1.0 / (m - 1))));
    }
  }
}

TEST_CASE("padded eigenvector solves the leading rows only") {
  const auto r = monotonicity_sweep(2, {1, 2});
  REQUIRE(r.embedding_residual.size() == 1);
  // Padding e_1 and testing against H_2 with eigenvalue 1 leaves the second
  // row at 1/2; the leading row is exact.
  CHECK(r.embedding_residual_leading[0] <= 1e-12);
  CHECK(r.embedding_residual[0] == doctest::Approx(0.5));
  CHECK(r.certified());
}
