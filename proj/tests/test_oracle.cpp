// Copyright 2026 The tflab Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include <algorithm>
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "oracles.hpp"
#include "tflab/error.hpp"
#include "tflab/locop.hpp"
#include "tflab/oracle.hpp"

using namespace tflab;

namespace {

constexpr double kPi = std::numbers::pi;
// Frozen from the radial quadrature below: int_0^1 2 pi r exp(-pi r^2) dr.
constexpr double kLambda0AtR1 = 0.956786081736228;

// s^k e^{-s} / k!, the radial density after s = pi r^2.
double poisson_density(int k, double s) {
  if (s == 0.0) return k == 0 ? 1.0 : 0.0;
  return std::exp(k * std::log(s) - std::lgamma(k + 1.0) - s);
}

// Independent route for lambda_k: Simpson on the radial density.
double lambda_by_quadrature(int k, double R) {
  return oracle_test::simpson([k](double s) { return poisson_density(k, s); }, 0.0, kPi * R * R, 40000);
}

}  // namespace

TEST_CASE("frozen lambda_0 at R = 1") {
  const double q = oracle_test::simpson(
      [](double r) { return 2.0 * kPi * r * std::exp(-kPi * r * r); }, 0.0, 1.0, 2000);
  CHECK(std::abs(q - kLambda0AtR1) < 1e-12);
  CHECK(std::abs(1.0 - std::exp(-kPi) - kLambda0AtR1) < 1e-15);
}

TEST_CASE("hermite_spectrogram examples") {
  CHECK(oracle::hermite_spectrogram(0, 0.0) == 1.0);
  CHECK(std::abs(oracle::hermite_spectrogram(0, 1.0) - std::exp(-kPi)) < 1e-16);
  CHECK(oracle::hermite_spectrogram(3, 0.0) == 0.0);
  // no overflow for large k
  const double big = oracle::hermite_spectrogram(1000000, std::sqrt(1000000.0 / kPi));
  CHECK(std::isfinite(big));
  CHECK(big > 0.0);
  CHECK(big < 1e-3);
}

TEST_CASE("disk_eigenvalue examples") {
  CHECK(std::abs(oracle::disk_eigenvalue(0, 1.0) - kLambda0AtR1) < 1e-14);
  for (double R : {0.3, 1.0, 2.5})
    CHECK(std::abs(oracle::disk_eigenvalue(0, R) - (1.0 - std::exp(-kPi * R * R))) < 1e-14);
  for (int k = 0; k < 10; ++k) CHECK(oracle::disk_eigenvalue(k, 0.0) == 0.0);
}

TEST_CASE("disk_eigenvalue matches radial quadrature") {
  for (int k : {0, 1, 2, 5, 10, 20, 35, 50}) {
    for (double R : {0.25, 0.5, 1.0, 2.0, 3.0, 4.0, 5.0}) {
      CHECK(std::abs(oracle::disk_eigenvalue(k, R) - lambda_by_quadrature(k, R)) <= 1e-10);
    }
  }
}

TEST_CASE("incomplete gamma pair") {
  for (double a : {1.0, 2.0, 7.0, 30.0, 200.0}) {
    for (double x : {0.0, 0.5, 1.0, 5.0, 29.0, 31.0, 150.0, 250.0}) {
      const double p = oracle::gamma_p(a, x);
      const double q = oracle::gamma_q(a, x);
      CHECK(p >= 0.0);
      CHECK(p <= 1.0);
      CHECK(std::abs(p + q - 1.0) < 1e-13);
    }
  }
  // integer a: direct Poisson sum in extended precision
  for (int n : {1, 3, 8, 15}) {
    for (long double x : {0.2L, 2.0L, 9.0L, 20.0L}) {
      long double term = 1.0L, sum = 0.0L;
      for (int j = 0; j < n; ++j) {
        sum += term;
        term *= x / (j + 1);
      }
      const double q = static_cast<double>(std::exp(-x) * sum);
      CHECK(std::abs(oracle::gamma_q(n, static_cast<double>(x)) - q) < 1e-14);
    }
  }
  // tail keeps relative accuracy
  CHECK(std::abs(oracle::gamma_q(1.0, 300.0) / std::exp(-300.0) - 1.0) < 1e-12);
}

TEST_CASE("Poisson CDF identity") {
  for (int K : {1, 2, 5, 13, 50}) {
    for (double r : {0.0, 0.3, 1.0, 2.0, 3.5}) {
      double sum = 0.0;
      for (int k = 0; k < K; ++k) sum += oracle::hermite_spectrogram(k, r);
      CHECK(std::abs(sum - oracle::gamma_q(K, kPi * r * r)) < 1e-10);
    }
  }
}

TEST_CASE("monotonicity") {
  for (double R : {0.5, 1.0, 2.0, 4.0}) {
    for (int k = 0; k < 30; ++k) {
      const double a = oracle::disk_eigenvalue(k, R);
      const double b = oracle::disk_eigenvalue(k + 1, R);
      if (b < 1e-300) break;
      // lambda_k saturates at 1 in double precision, so strictness is read
      // off the complement there
      CHECK(b <= a);
      if (a < 1.0) CHECK(b < a);
      const double qa = oracle::gamma_q(k + 1, kPi * R * R);
      const double qb = oracle::gamma_q(k + 2, kPi * R * R);
      if (qb < 1.0) CHECK(qb > qa);
    }
  }
  for (int k : {0, 3, 10}) {
    double prev = 0.0;
    for (double R = 0.1; R < 5.0; R += 0.1) {
      const double v = oracle::disk_eigenvalue(k, R);
      if (prev > 0.0 && v < 1.0) CHECK(v > prev);
      prev = v;
    }
  }
}

TEST_CASE("gaussian_disk_model invariants") {
  for (double R : {0.5, 1.0, 2.0, 3.0}) {
    const oracle::GaussianDiskModel m = oracle::gaussian_disk_model(R, 40);
    REQUIRE(m.eigenvalues.size() == 40u);
    CHECK(m.eigenvalues.front() < 1.0);
    double sum = 0.0;
    for (std::size_t k = 0; k < m.eigenvalues.size(); ++k) {
      CHECK(m.eigenvalues[k] > 0.0);
      if (k > 0) CHECK(m.eigenvalues[k] < m.eigenvalues[k - 1]);
      sum += m.eigenvalues[k];
    }
    CHECK(sum <= kPi * R * R + 1e-9);
  }
}

TEST_CASE("analytic_accumulated") {
  for (double R : {0.5, 1.0, 3.0, 10.0}) CHECK(std::abs(oracle::analytic_accumulated(R, 0.0) - 1.0) < 1e-15);
  for (double R : {6.0, 10.0, 20.0}) CHECK(oracle::analytic_accumulated(R, R / 2) >= 0.99);
  for (double R : {0.7, 2.0, 5.0, 15.0})
    for (double r = 0.0; r < 2 * R; r += R / 17) {
      const double v = oracle::analytic_accumulated(R, r);
      CHECK(v >= 0.0);
      CHECK(v <= 1.0 + 1e-15);
    }
}

TEST_CASE("analytic_l1_error") {
  for (double R : {0.5, 1.0, 2.0, 4.0, 8.0, 12.5, 20.0}) {
    const double q = oracle::analytic_l1_error(R);
    CHECK(q > 0.0);
    CHECK(std::abs(q - oracle::analytic_l1_error_from_eigenvalues(R)) < 1e-6);
  }
  const double ratio = oracle::analytic_l1_error(8.0) / oracle::analytic_l1_error(4.0);
  CHECK(ratio >= 1.7);
  CHECK(ratio <= 2.3);
  CHECK_THROWS_AS(oracle::analytic_l1_error(0.4), Error);
  CHECK_THROWS_AS(oracle::analytic_l1_error(20.5), Error);
}

TEST_CASE("discrete disk spectrum approaches the oracle") {
  // Coarse version of the acceptance check: R = 1 at two resolutions.
  double dev[2];
  int i = 0;
  for (std::size_t L : {256u, 1024u}) {
    const PhaseGrid grid = make_grid(L);
    const LocOperator op(gaussian_window(grid), disk_mask(grid, {0.0, 0.0}, 1.0));
    const EigenSystem e = eigh(op, 0);
    double worst = 0.0;
    for (int k = 0; k < 12; ++k)
      worst = std::max(worst, std::abs(e.eigenvalues[k] - oracle::disk_eigenvalue(k, 1.0)));
    dev[i++] = worst;
  }
  CHECK(dev[1] <= 2e-2);
  CHECK(dev[1] < dev[0]);
}
