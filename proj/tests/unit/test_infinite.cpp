#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "hilbert/infinite.hpp"
#include "hilbert/rng.hpp"
#include "oracle.hpp"

using namespace hilbert;

namespace {

SequenceVector random_unit_l1(std::size_t support, SplitMix64& rng, bool nonnegative) {
  std::vector<double> v(support);
  for (double& e : v) e = nonnegative ? rng.uniform() : rng.uniform(-1.0, 1.0);
  const SequenceVector raw(std::move(v));
  return raw.scaled(1.0 / raw.norm1());
}

}  // namespace

TEST_CASE("pi over sqrt 6 constant") {
  CHECK(kPiOverSqrt6 == doctest::Approx(std::numbers::pi / std::sqrt(6.0)).epsilon(1e-16));
  CHECK(t_operator_bound(2.0) == doctest::Approx(kPiOverSqrt6).epsilon(1e-14));
  CHECK(f_operator_bound(2, 2.0) == doctest::Approx(kPiOverSqrt6).epsilon(1e-14));
  const double zeta2 = std::numbers::pi * std::numbers::pi / 6.0;
  for (int m = 3; m <= 6; ++m) {
    const double b = f_operator_bound(m, 2.0 * (m - 1));
    CHECK(b == doctest::Approx(std::pow(zeta2, 1.0 / (2.0 * (m - 1)))).epsilon(1e-14));
    CHECK(b < kPiOverSqrt6);
  }
}

TEST_CASE("e_1 maps to the harmonic sequence") {
  for (int m = 2; m <= 5; ++m) {
    const auto y = apply_infinite(m, SequenceVector{1.0}, 1000);
    for (std::size_t i = 0; i < y.size(); ++i) CHECK(y[i] == 1.0 / static_cast<double>(i + 1));
  }
}

TEST_CASE("e_1 attains the operator bounds") {
  for (int m = 2; m <= 5; ++m) {
    const auto t = t_infinity(m, SequenceVector{1.0}, 2.0);
    CHECK(t.value <= kPiOverSqrt6);
    CHECK(t.contains(kPiOverSqrt6, 1e-12));
    CHECK(t.upper() - kPiOverSqrt6 <= 1e-9);
    CHECK(kPiOverSqrt6 - t.value <= 1e-5);

    // F e_1 = (i^{-1/(m-1)})_i, so its 2(m-1)-norm is zeta(2)^{1/(2(m-1))}.
    const double pf = 2.0 * (m - 1);
    const auto f = f_infinity(m, SequenceVector{1.0}, pf);
    const double want = f_operator_bound(m, pf);
    CHECK(f.contains(want, 1e-12));
    CHECK(std::fabs(f.upper() - want) <= 1e-9);
    CHECK(f.upper() <= kPiOverSqrt6 + 1e-9);
  }
}

TEST_CASE("e_2 for m = 2") {
  // T e_2 = (1/(i+1))_i, whose squared norm is zeta(2) - 1.
  const double want = std::sqrt(std::numbers::pi * std::numbers::pi / 6.0 - 1.0);
  const auto t = t_infinity(2, SequenceVector{0.0, 1.0}, 2.0);
  CHECK(t.contains(want, 1e-12));
  CHECK(t.upper() - want <= 1e-9);
}

TEST_CASE("homogeneity: T of degree 1, F of degree 1") {
  SplitMix64 rng(6);
  for (int m = 2; m <= 5; ++m) {
    const auto x = random_unit_l1(6, rng, true);
    const double c = 2.5;
    const auto a = t_infinity(m, x, 2.0, 20'000);
    const auto b = t_infinity(m, x.scaled(c), 2.0, 20'000);
    CHECK(b.value == doctest::Approx(c * a.value).epsilon(1e-12));
    const auto fa = f_infinity(m, x, 2.0 * (m - 1), 20'000);
    const auto fb = f_infinity(m, x.scaled(c), 2.0 * (m - 1), 20'000);
    CHECK(fb.value == doctest::Approx(c * fa.value).epsilon(1e-12));
    CHECK(t_infinity(m, SequenceVector::zeros(4), 2.0).value == 0.0);
  }
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(f_infinity(3, SequenceVector{1.0}, 1.5), DomainError);
  CHECK_THROWS_AS(f_infinity(3, SequenceVector{1.0}, 2.0), DomainError);
  CHECK_THROWS_AS(t_infinity(3, SequenceVector{1.0}, 1.0), DomainError);
  CHECK_THROWS_AS(t_infinity(1, SequenceVector{1.0}, 2.0), DomainError);
  CHECK_THROWS_AS(power_tail_bound(1.0, 10), DomainError);
  CHECK_THROWS_AS(f_operator_bound(4, 3.0), DomainError);
}

TEST_CASE("certified interval contains the value at a far longer truncation") {
  SplitMix64 rng(10);
  for (int m = 2; m <= 5; ++m)
    for (int trial = 0; trial < 5; ++trial) {
      const bool nonneg = (m - 1) % 2 == 0;
      const auto x = random_unit_l1(1 + rng.below(8), rng, nonneg);
      const auto coarse_t = t_infinity(m, x, 2.0, 2'000);
      const auto fine_t = t_infinity(m, x, 2.0, 400'000);
      CHECK(coarse_t.contains(fine_t.value, 1e-13));
      CHECK(fine_t.upper() <= coarse_t.upper() + 1e-13);
      const double p = 2.0 * (m - 1);
      const auto coarse_f = f_infinity(m, x, p, 2'000);
      const auto fine_f = f_infinity(m, x, p, 400'000);
      CHECK(coarse_f.contains(fine_f.value, 1e-13));
      CHECK(fine_t.value <= t_operator_bound(2.0) + 1e-12);
      CHECK(fine_f.value <= f_operator_bound(m, p) + 1e-12);
    }
}

TEST_CASE("m = 2 agrees with the dense Hilbert matrix product") {
  SplitMix64 rng(15);
  for (std::size_t support = 1; support <= 50; support += 7) {
    const auto x = random_unit_l1(support, rng, false);
    const std::size_t rows = 3000;
    const auto got = apply_infinite(2, x, rows);
    std::vector<double> padded(rows, 0.0);
    for (std::size_t i = 0; i < support; ++i) padded[i] = x[i];
    const auto want = oracle::hilbert_matrix_apply(rows, padded);
    double worst = 0.0;
    for (std::size_t i = 0; i < rows; ++i) worst = std::max(worst, std::fabs(got[i] - want[i]));
    CHECK(worst <= 1e-14);
  }
}

TEST_CASE("F accepts signed inputs when the root degree is even") {
  // (H x^2)_i is the integral of t^{i-1} (1 - 4t)^2, which is positive.
  const auto f = f_infinity(3, SequenceVector{1.0, -4.0}, 4.0, 1000);
  CHECK(f.value > 0.0);
  const auto y = apply_infinite(3, SequenceVector{1.0, -4.0}, 3);
  CHECK(y[0] == doctest::Approx(1.0 - 8.0 / 2.0 + 16.0 / 3.0));
}

TEST_CASE("tail bound formula") {
  CHECK(power_tail_bound(2.0, 100) == doctest::Approx(0.01));
  const auto t = t_infinity(2, SequenceVector{1.0}, 2.0, 100);
  CHECK(t.tail_bound == doctest::Approx(std::sqrt(0.01)));
  CHECK(t.truncation == 100);
}

TEST_CASE("norm search examples") {
  NormSearchOptions o;
  o.op = InfiniteOp::T;
  o.m = 2;
  o.p = 2.0;
  o.trials = 20;
  o.support = 4;
  o.climb_steps = 20;
  o.search_len = 2000;
  o.out_len = 20'000;
  const auto r = norm_search(o);
  CHECK(r.bound == doctest::Approx(kPiOverSqrt6));
  CHECK(r.best.value <= r.bound);
  CHECK(r.gap >= 0.0);
  CHECK(r.gap < 1e-3);
  CHECK(r.best_vector.norm1() == doctest::Approx(1.0));
  CHECK_FALSE(r.exceeded_bound);
  CHECK(r.evaluations > 0);

  o.op = InfiniteOp::F;
  o.m = 3;
  o.p = 4.0;
  const auto f = norm_search(o);
  CHECK_FALSE(f.exceeded_bound);
  CHECK(f.best.value <= f.bound);

  o.support = 0;
  CHECK_THROWS_AS(norm_search(o), DomainError);
}

TEST_CASE("norm search is deterministic for a fixed seed") {
  NormSearchOptions o;
  o.m = 4;
  o.op = InfiniteOp::F;
  o.p = 6.0;
  o.trials = 10;
  o.climb_steps = 10;
  o.search_len = 1000;
  o.out_len = 5000;
  o.seed = 99;
  const auto a = norm_search(o);
  const auto b = norm_search(o);
  CHECK(a.best.value == b.best.value);
  CHECK(a.best_vector.data() == b.best_vector.data());
}
