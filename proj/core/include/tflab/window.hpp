// Copyright 2026 The tflab Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#pragma once

#include <span>
#include <string>
#include <vector>

#include "tflab/grid.hpp"

namespace tflab {

/// Analysis window g. Samples whose magnitude falls below 1e-16 of the peak
/// are stored as exact zeros so that the window has a compact circular
/// support; `support()` lists the surviving indices in increasing order.
class Window {
 public:
  /// Builds a window from raw samples, normalized to unit l2 norm. Throws
  /// invalid-argument if the samples are all zero or non-finite.
  static Window from_values(const PhaseGrid& grid, std::vector<cplx> values,
                            std::string name = "custom");

  const Signal& signal() const noexcept { return signal_; }
  const PhaseGrid& grid() const noexcept { return signal_.grid; }
  std::span<const cplx> values() const noexcept { return signal_.values; }
  double l2_norm() const noexcept { return l2_norm_; }
  const std::string& name() const noexcept { return name_; }

  std::span<const std::size_t> support() const noexcept { return support_; }

  /// True when every sample is real and g(t) == g(-t) exactly.
  bool real_symmetric() const noexcept { return real_symmetric_; }

 private:
  Window(Signal s, std::string name);

  Signal signal_;
  double l2_norm_ = 0.0;
  std::string name_;
  std::vector<std::size_t> support_;
  bool real_symmetric_ = false;
};

/// Periodized sampled Gaussian exp(-pi t^2) with seven wrap terms.
Window gaussian_window(const PhaseGrid& grid);

/// cos^2 bump supported on |t| < width / 2 (continuous time units).
Window hann_window(const PhaseGrid& grid, double width = 2.0);

/// Indicator of an odd number of samples centred at 0 spanning about `width`.
Window boxcar_window(const PhaseGrid& grid, double width = 1.0);

/// Parses "gaussian", "hann[:width]", "boxcar[:width]". File-backed windows
/// are handled by io::read_window.
Window window_from_spec(const PhaseGrid& grid, const std::string& spec);

}  // namespace tflab
