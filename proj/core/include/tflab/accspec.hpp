// Copyright 2026 The tflab Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#pragma once

#include <cstddef>
#include <vector>

#include "tflab/locop.hpp"
#include "tflab/mask.hpp"
#include "tflab/window.hpp"

namespace tflab {

/// Eigenvalues closer than this are treated as one cluster when checking
/// whether the A_Omega cutoff splits a degenerate eigenspace.
inline constexpr double kDegeneracyGap = 1e-8;

/// Default plunge threshold: eigenvalues in [delta, 1 - delta] are counted.
inline constexpr double kDefaultPlungeDelta = 0.1;

/// ceil(area). Throws invalid-argument for an empty mask.
std::size_t a_omega(const DomainMask& mask);

/// Sum of the spectrograms of the first k eigenvectors.
SpectrogramField accumulate(const EigenSystem& eigs, const Window& g, std::size_t k);

struct AccumulatedSpectrogram {
  SpectrogramField field;
  std::size_t a_omega = 0;
  DomainMask mask;
  std::vector<double> eigenvalues_used;
  /// lambda_A - lambda_{A+1} < kDegeneracyGap: the field depends on the basis
  /// chosen inside the cluster.
  bool degenerate_cutoff = false;
};

/// rho_{g,Omega} from an eigensystem holding at least A_Omega eigenvectors.
AccumulatedSpectrogram accumulated_spectrogram(const EigenSystem& eigs,
                                               const Window& g,
                                               const DomainMask& mask);

/// ||rho - 1_Omega||_1 in measure units.
double l1_error(const AccumulatedSpectrogram& rho);

/// area + A - 2 sum_{k <= A} lambda_k. Throws invalid-argument when fewer than
/// A eigenvalues are available.
double l1_error_from_eigenvalues(const EigenSystem& eigs, const DomainMask& mask);

struct PlungeStats {
  double area = 0.0;
  double perimeter = 0.0;
  std::size_t a_omega = 0;
  double trace = 0.0;
  double trace_sq = 0.0;
  /// trace - trace_sq = sum lambda (1 - lambda).
  double deficit = 0.0;
  /// area - sum_{k <= A} lambda_k.
  double eigen_deficit = 0.0;
  /// lambda_A, 0 when the mask is empty.
  double lambda_cut = 0.0;
  double delta = kDefaultPlungeDelta;
  /// Number of eigenvalues in [delta, 1 - delta].
  std::size_t mid_count = 0;
  /// False when mid_count was taken from a partial spectrum.
  bool spectrum_complete = true;
};

/// Fills every PlungeStats field. trace and trace_sq come from the symbol and
/// the ambiguity convolution, not from the eigenvalues.
PlungeStats plunge_stats(const EigenSystem& eigs, const DomainMask& mask,
                         const LocOperator& op, double delta = kDefaultPlungeDelta);

}  // namespace tflab
