#include <cmath>
#include <random>

#include "doctest.h"
#include "gsc/families.hpp"
#include "gsc/numerics.hpp"

using namespace gsc::numerics;

TEST_CASE("alpha1 root") {
  RootResult r = alpha1(1e-10);
  CHECK(std::abs(r.value - (-1.7036)) < 1e-4);
  CHECK(std::abs(r.residual) <= 1e-10);
  CHECK(r.bracket.first < r.value);
  CHECK(r.value < r.bracket.second);
  CHECK(r.bracket.second - r.bracket.first <= 1e-10);
  CHECK(alpha1_residual(r.bracket.first) * alpha1_residual(r.bracket.second) <= 0.0);
  CHECK(r.iterations > 0);
  CHECK(r.iterations <= 64);

  CHECK(alpha1_residual(-1.0) * alpha1_residual(-2.5) < 0.0);
  CHECK(std::abs(alpha1_value() - r.value) < 1e-9);

  CHECK_THROWS_AS(alpha1(0.0), std::invalid_argument);
  CHECK_THROWS_AS(alpha1(-1e-3), std::invalid_argument);
}

TEST_CASE("alpha1 residual has one sign change") {
  int changes = 0;
  double prev = alpha1_residual(-3.0);
  for (int i = 1; i < 1000; ++i) {
    const double x = -3.0 + i * (2.99 / 999.0);
    const double cur = alpha1_residual(x);
    if ((prev < 0) != (cur < 0)) ++changes;
    prev = cur;
  }
  CHECK(changes == 1);
}

TEST_CASE("eta") {
  CHECK(std::abs(eta(-1.0)) <= 1e-12);
  CHECK(std::abs(eta(0.0)) <= 1e-12);
  CHECK(eta(-0.5) == doctest::Approx(1.0 - 1.0 / std::sqrt(3.0) - 1.0 / std::sqrt(6.0)).epsilon(1e-14));
  for (int i = 1; i <= 99; ++i) CHECK(eta(-1.0 + i / 100.0) > 0.0);
  for (double x : {-1.9, -1.5, -1.1, 0.1, 0.5, 0.9}) CHECK(eta(x) < 0.0);
}

TEST_CASE("h_convex") {
  CHECK(std::abs(h_convex(-1.0) - 5.0 / 6.0) <= 1e-15);
  CHECK(h_convex(0.0) == 1.0);
  CHECK(h_convex(-0.5) == doctest::Approx(-0.25 + std::sqrt(4.0 / 3.0)).epsilon(1e-14));
  for (int i = 1; i <= 99; ++i) CHECK(h_convex(-1.0 + i / 100.0) < 1.0);
  for (int i = 0; i + 2 <= 100; ++i) {
    const double x = -1.0 + i / 100.0;
    CHECK(h_convex(x) - 2 * h_convex(x + 0.01) + h_convex(x + 0.02) > 0.0);
  }
}

TEST_CASE("f_theorem3") {
  for (int n : {6, 8, 10}) {
    for (double alpha : {-1.0, -0.5, -0.1}) {
      CHECK(f_theorem3(2, n, alpha) == doctest::Approx(n * std::pow(4.0, alpha)).epsilon(1e-14));
      CHECK(f_theorem3(3, n, alpha) == doctest::Approx(gsc::second_max_unicyclic_value(n, alpha)).epsilon(1e-14));
    }
  }
  CHECK(f_theorem3(2, 8, -0.5) > f_theorem3(3, 8, -0.5));
  CHECK(f_theorem3(3, 8, -0.5) > f_theorem3(4, 8, -0.5));
  for (int n : {6, 10, 14}) {
    for (double alpha : {-1.0, -0.5, -0.1}) {
      for (double x = 2.0; x + 0.1 <= (n + 1) / 2.0 + 1e-12; x += 0.1) {
        CHECK(f_theorem3(x, n, alpha) > f_theorem3(x + 0.1, n, alpha));
      }
    }
  }
  CHECK_THROWS_AS(f_theorem3(1.5, 8, -0.5), std::domain_error);
}

TEST_CASE("g_theorem3") {
  CHECK(g_theorem3(2.0, -0.5) == doctest::Approx(std::pow(4.0, -0.5) - std::pow(4.0, -1.5)).epsilon(1e-14));
  auto grid = linear_grid(2.0, 20.0, 0.1);
  CHECK(monotone_check(MonotoneClaim::kGDecreasing, -0.5, grid));
  for (double x : grid) CHECK(g_theorem3(x, -0.5) <= g_theorem3(2.0, -0.5));
}

TEST_CASE("jensen_gap") {
  CHECK(jensen_gap(3, 5, -1.0) == doctest::Approx(1.0 / 30.0).epsilon(1e-14));
  CHECK(jensen_gap(4, 4, -0.5) == 0.0);
  for (double alpha : {-1.7, -1.0, -0.5, -0.1}) CHECK(jensen_gap(3, 5, alpha) > 0.0);
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> side(0.5, 20.0);
  std::uniform_real_distribution<double> expo(-2.0, -0.01);
  for (int i = 0; i < 1000; ++i) {
    double a = side(rng);
    double b = side(rng);
    if (a == b) b += 1.0;
    CHECK(jensen_gap(a, b, expo(rng)) > 0.0);
  }
  CHECK_THROWS_AS(jensen_gap(0.0, 1.0, -1.0), std::domain_error);
  CHECK_THROWS_AS(jensen_gap(2.0, -1.0, -1.0), std::domain_error);
}

TEST_CASE("monotone claims") {
  auto wide = linear_grid(2.0, 20.0, 0.1);
  CHECK(wide.size() == 181);
  CHECK(monotone_check(MonotoneClaim::kShiftDiffIncreasing, -1.0, wide));
  auto from_zero = linear_grid(0.0, 20.0, 0.1);
  CHECK(monotone_check(MonotoneClaim::kRelocateDiffDecreasing, -0.5, from_zero, 7));
  for (int delta = 4; delta <= 10; ++delta) {
    for (double alpha : {-1.7, -1.0, -0.5, -0.1}) {
      CHECK(monotone_check(MonotoneClaim::kRelocateDiffDecreasing, alpha, from_zero, delta));
      CHECK(monotone_check(MonotoneClaim::kShiftDiffIncreasing, alpha, wide));
    }
  }

  CHECK_THROWS_AS(monotone_check(MonotoneClaim::kShiftDiffIncreasing, 0.5, wide), std::domain_error);
  CHECK_THROWS_AS(monotone_check(MonotoneClaim::kGDecreasing, -1.5, wide), std::domain_error);
  CHECK_THROWS_AS(monotone_check(MonotoneClaim::kRelocateDiffDecreasing, -0.5, from_zero, 3), std::domain_error);
  std::vector<double> bad{1.0, 0.5, 2.0};
  CHECK_THROWS_AS(monotone_check(MonotoneClaim::kShiftDiffIncreasing, -1.0, bad), std::domain_error);
}
