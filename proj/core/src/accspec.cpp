// Copyright 2026 The tflab Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include "tflab/accspec.hpp"

#include <string>

#include "tflab/error.hpp"
#include "tflab/tfa.hpp"

namespace tflab {
namespace {

// ceil(count / L) in integers so exact integer areas are not bumped up.
std::size_t ceil_area(const DomainMask& mask) {
  const std::size_t L = mask.grid().size();
  return (mask.count() + L - 1) / L;
}

double leading_sum(const EigenSystem& eigs, std::size_t k) {
  double s = 0.0;
  for (std::size_t i = 0; i < k; ++i) s += eigs.eigenvalues[i];
  return s;
}

}  // namespace

std::size_t a_omega(const DomainMask& mask) {
  require(!mask.empty(), "A_Omega is undefined for an empty mask");
  return ceil_area(mask);
}

SpectrogramField accumulate(const EigenSystem& eigs, const Window& g, std::size_t k) {
  require(k >= 1, "accumulate needs k >= 1");
  require(k <= eigs.vector_count(),
          "accumulate: requested " + std::to_string(k) + " eigenvectors, only " +
              std::to_string(eigs.vector_count()) + " available");
  require_same_grid(eigs.grid, g.grid(), "accumulate");
  SpectrogramField rho(eigs.grid);
  for (std::size_t i = 0; i < k; ++i) add_spectrogram(eigs.vector(i), g, rho);
  return rho;
}

AccumulatedSpectrogram accumulated_spectrogram(const EigenSystem& eigs, const Window& g,
                                               const DomainMask& mask) {
  require_same_grid(eigs.grid, mask.grid(), "accumulated_spectrogram");
  const std::size_t A = a_omega(mask);
  AccumulatedSpectrogram out{accumulate(eigs, g, A), A, mask, {}, false};
  out.eigenvalues_used.assign(eigs.eigenvalues.begin(),
                              eigs.eigenvalues.begin() + static_cast<long>(A));
  if (eigs.count() > A) {
    out.degenerate_cutoff = eigs.eigenvalues[A - 1] - eigs.eigenvalues[A] < kDegeneracyGap;
  }
  return out;
}

double l1_error(const AccumulatedSpectrogram& rho) {
  return field_l1_diff(rho.field, rho.mask.indicator());
}

double l1_error_from_eigenvalues(const EigenSystem& eigs, const DomainMask& mask) {
  const std::size_t A = ceil_area(mask);
  require(eigs.count() >= A, "need at least A_Omega = " + std::to_string(A) +
                                 " eigenvalues, have " + std::to_string(eigs.count()));
  return mask.area() + static_cast<double>(A) - 2.0 * leading_sum(eigs, A);
}

PlungeStats plunge_stats(const EigenSystem& eigs, const DomainMask& mask,
                         const LocOperator& op, double delta) {
  require(delta > 0.0 && delta < 0.5, "plunge threshold must lie in (0, 1/2)");
  require_same_grid(op.grid(), mask.grid(), "plunge_stats");
  PlungeStats s;
  s.area = mask.area();
  s.perimeter = mask.perimeter();
  s.a_omega = ceil_area(mask);
  s.delta = delta;
  s.spectrum_complete = eigs.complete;
  s.trace = trace_symbol(op);
  s.trace_sq = mask.empty() ? 0.0 : trace_square_ambiguity(op);
  s.deficit = s.trace - s.trace_sq;
  require(eigs.count() >= s.a_omega, "plunge_stats needs at least A_Omega eigenvalues");
  s.eigen_deficit = s.area - leading_sum(eigs, s.a_omega);
  s.lambda_cut = s.a_omega > 0 ? eigs.eigenvalues[s.a_omega - 1] : 0.0;
  for (double v : eigs.eigenvalues) {
    if (v >= delta && v <= 1.0 - delta) ++s.mid_count;
  }
  return s;
}

}  // namespace tflab
