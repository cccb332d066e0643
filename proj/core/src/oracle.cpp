// Copyright 2026 The tflab Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include "tflab/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "tflab/error.hpp"

namespace tflab::oracle {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxTerms = 1'000'000;

// exp(a ln x - x - lgamma(a)), the common prefactor of P and Q.
double gamma_prefactor(double a, double x) {
  return std::exp(a * std::log(x) - x - std::lgamma(a));
}

// P(a, x) by the power series, valid for x < a + 1.
double series_p(double a, double x) {
  double term = 1.0 / a;
  double sum = term;
  for (int n = 1; n < kMaxTerms; ++n) {
    term *= x / (a + n);
    sum += term;
    if (term < sum * kEps) return sum * gamma_prefactor(a, x);
  }
  fail(ErrorKind::kNumericFailure, "incomplete gamma series did not converge");
}

// Q(a, x) by the Legendre continued fraction (modified Lentz), x >= a + 1.
double continued_fraction_q(double a, double x) {
  constexpr double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < kMaxTerms; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double step = d * c;
    h *= step;
    if (std::abs(step - 1.0) < kEps) return h * gamma_prefactor(a, x);
  }
  fail(ErrorKind::kNumericFailure, "incomplete gamma continued fraction did not converge");
}

double log_poisson_term(int k, double s) {
  return k * std::log(s) - std::lgamma(k + 1.0) - s;
}

// sum_{k < count} exp(-s) s^k / k!
double poisson_partial_sum(int count, double s) {
  if (count <= 0) return 0.0;
  if (s == 0.0) return 1.0;
  double sum = 0.0;
  for (int k = 0; k < count; ++k) sum += std::exp(log_poisson_term(k, s));
  return std::min(sum, 1.0);
}

int cutoff(double R) {
  return static_cast<int>(std::ceil(std::numbers::pi * R * R));
}

}  // namespace

double hermite_spectrogram(int k, double r) {
  require(k >= 0 && r >= 0.0, "hermite_spectrogram needs k >= 0 and r >= 0");
  if (r == 0.0) return k == 0 ? 1.0 : 0.0;
  return std::exp(log_poisson_term(k, std::numbers::pi * r * r));
}

double gamma_p(double a, double x) {
  require(a > 0.0 && x >= 0.0, "gamma_p needs a > 0 and x >= 0");
  if (x == 0.0) return 0.0;
  if (x < a + 1.0) return series_p(a, x);
  return 1.0 - continued_fraction_q(a, x);
}

double gamma_q(double a, double x) {
  require(a > 0.0 && x >= 0.0, "gamma_q needs a > 0 and x >= 0");
  if (x == 0.0) return 1.0;
  if (x < a + 1.0) return 1.0 - series_p(a, x);
  return continued_fraction_q(a, x);
}

double disk_eigenvalue(int k, double R) {
  require(k >= 0 && R >= 0.0, "disk_eigenvalue needs k >= 0 and R >= 0");
  return gamma_p(k + 1.0, std::numbers::pi * R * R);
}

double analytic_accumulated(double R, double r) {
  require(R > 0.0 && r >= 0.0, "analytic_accumulated needs R > 0 and r >= 0");
  return poisson_partial_sum(cutoff(R), std::numbers::pi * r * r);
}

double analytic_l1_error(double R) {
  require(R >= 0.5 && R <= 20.0, "analytic_l1_error supports R in [0.5, 20]");
  using boost::math::quadrature::gauss_kronrod;
  constexpr double abs_tol = 1e-8;
  const int count = cutoff(R);
  const double area = std::numbers::pi * R * R;
  // In s = pi r^2 the measure 2 pi r dr becomes ds.
  auto inside = [count](double s) { return 1.0 - poisson_partial_sum(count, s); };
  auto outside = [count](double s) { return poisson_partial_sum(count, s); };
  // Poisson tail beyond this point is below 1e-40.
  const double upper = area + 40.0 * std::sqrt(area) + 200.0;

  double err_in = 0.0;
  double err_out = 0.0;
  const double rel = 1e-12;
  const double in = gauss_kronrod<double, 61>::integrate(inside, 0.0, area, 30, rel, &err_in);
  const double out = gauss_kronrod<double, 61>::integrate(outside, area, upper, 30, rel, &err_out);
  if (!(err_in + err_out <= abs_tol)) {
    std::ostringstream msg;
    msg << "quadrature error estimate " << err_in + err_out << " exceeds " << abs_tol
        << " at R=" << R;
    fail(ErrorKind::kNumericFailure, msg.str());
  }
  return in + out;
}

double analytic_l1_error_from_eigenvalues(double R) {
  require(R > 0.0, "radius must be positive");
  const int count = cutoff(R);
  const double area = std::numbers::pi * R * R;
  double sum = 0.0;
  for (int k = 0; k < count; ++k) sum += gamma_p(k + 1.0, area);
  return area + count - 2.0 * sum;
}

GaussianDiskModel gaussian_disk_model(double R, int k_max) {
  require(k_max >= 0, "k_max must be nonnegative");
  GaussianDiskModel model{R, k_max, {}};
  model.eigenvalues.reserve(static_cast<std::size_t>(k_max));
  for (int k = 0; k < k_max; ++k) model.eigenvalues.push_back(disk_eigenvalue(k, R));
  return model;
}

}  // namespace tflab::oracle
