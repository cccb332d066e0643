// Copyright 2026 The tflab Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#pragma once

#include <vector>

// Closed-form reference for the Gaussian window h0(t) = 2^{1/4} exp(-pi t^2)
// and the disk B_R centred at the origin. Eigenfunctions are the Hermite
// functions and the k-th eigenspectrogram is
//
//   |V_{h0} h_k(z)|^2 = pi^k / k! |z|^{2k} exp(-pi |z|^2),
//
// so every eigenvalue is a regularized incomplete gamma function of pi R^2.
// All quantities are in continuous units.
namespace tflab::oracle {

/// pi^k / k! r^{2k} exp(-pi r^2), evaluated in log space.
double hermite_spectrogram(int k, double r);

/// Regularized lower incomplete gamma P(a, x) for a > 0, x >= 0.
double gamma_p(double a, double x);
/// Regularized upper incomplete gamma Q(a, x) = 1 - P(a, x), computed
/// directly in the tail so that small values keep relative accuracy.
double gamma_q(double a, double x);

/// lambda_k(B_R) = P(k + 1, pi R^2), k >= 0.
double disk_eigenvalue(int k, double R);

/// rho_{h0,B_R}(r) = sum_{k < ceil(pi R^2)} hermite_spectrogram(k, r).
double analytic_accumulated(double R, double r);

/// ||rho_{h0,B_R} - 1_{B_R}||_{L^1(R^2)} by adaptive Gauss-Kronrod
/// quadrature, absolute tolerance 1e-8. R must lie in [0.5, 20]. Throws
/// numeric-failure if the quadrature error estimate misses the tolerance.
double analytic_l1_error(double R);

/// pi R^2 + A - 2 sum_{k < A} P(k + 1, pi R^2), A = ceil(pi R^2).
double analytic_l1_error_from_eigenvalues(double R);

struct GaussianDiskModel {
  double R = 0.0;
  int k_max = 0;
  std::vector<double> eigenvalues;
};

/// Eigenvalues lambda_0 .. lambda_{k_max - 1} for radius R.
GaussianDiskModel gaussian_disk_model(double R, int k_max);

}  // namespace tflab::oracle
