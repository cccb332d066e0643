// Copyright 2026 The tflab Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include "tflab/window.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "tflab/error.hpp"

namespace tflab {
namespace {

// Samples below this fraction of the peak are flushed to zero.
constexpr double kSupportCutoff = 1e-16;

double parse_width(const std::string& spec, std::size_t colon, double fallback) {
  if (colon == std::string::npos) return fallback;
  const std::string tail = spec.substr(colon + 1);
  std::size_t used = 0;
  double w = 0.0;
  try {
    w = std::stod(tail, &used);
  } catch (const std::exception&) {
    fail(ErrorKind::kInvalidArgument, "bad window width in '" + spec + "'");
  }
  require(used == tail.size() && std::isfinite(w) && w > 0.0,
          "bad window width in '" + spec + "'");
  return w;
}

}  // namespace

Window::Window(Signal s, std::string name) : signal_(std::move(s)), name_(std::move(name)) {
  double peak = 0.0;
  for (const cplx& v : signal_.values) {
    require(std::isfinite(v.real()) && std::isfinite(v.imag()),
            "window samples must be finite");
    peak = std::max(peak, std::abs(v));
  }
  require(peak > 0.0, "window must not vanish identically");
  for (cplx& v : signal_.values) {
    if (std::abs(v) < kSupportCutoff * peak) v = 0.0;
  }
  const double norm = signal_.norm();
  for (cplx& v : signal_.values) v /= norm;
  l2_norm_ = signal_.norm();

  const std::size_t L = signal_.size();
  real_symmetric_ = true;
  for (std::size_t t = 0; t < L; ++t) {
    const cplx v = signal_.values[t];
    if (v != 0.0) support_.push_back(t);
    if (v.imag() != 0.0 || v != signal_.values[(L - t) % L]) real_symmetric_ = false;
  }
}

Window Window::from_values(const PhaseGrid& grid, std::vector<cplx> values, std::string name) {
  return Window(Signal(grid, std::move(values)), std::move(name));
}

Window gaussian_window(const PhaseGrid& grid) {
  std::vector<cplx> v(grid.size());
  for (std::size_t t = 0; t < grid.size(); ++t) {
    const double x = grid.coord(t);
    double s = 0.0;
    for (int j = -3; j <= 3; ++j) {
      const double u = x - j * grid.side();
      s += std::exp(-std::numbers::pi * u * u);
    }
    v[t] = s;
  }
  return Window::from_values(grid, std::move(v), "gaussian");
}

Window hann_window(const PhaseGrid& grid, double width) {
  require(width > 0.0 && width < grid.side(), "hann width must lie in (0, sqrt(L))");
  std::vector<cplx> v(grid.size());
  for (std::size_t t = 0; t < grid.size(); ++t) {
    const double x = grid.coord(t);
    if (std::abs(x) < 0.5 * width) {
      const double c = std::cos(std::numbers::pi * x / width);
      v[t] = c * c;
    }
  }
  return Window::from_values(grid, std::move(v), "hann");
}

Window boxcar_window(const PhaseGrid& grid, double width) {
  require(width > 0.0, "boxcar width must be positive");
  const auto half = static_cast<long>(std::floor(0.5 * width * grid.side()));
  require(2 * half + 1 <= static_cast<long>(grid.size()), "boxcar wider than the grid");
  std::vector<cplx> v(grid.size());
  for (long t = -half; t <= half; ++t) v[grid.wrap(t)] = 1.0;
  return Window::from_values(grid, std::move(v), "boxcar");
}

Window window_from_spec(const PhaseGrid& grid, const std::string& spec) {
  const std::size_t colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  if (kind == "gaussian" && colon == std::string::npos) return gaussian_window(grid);
  if (kind == "hann") return hann_window(grid, parse_width(spec, colon, 2.0));
  if (kind == "boxcar") return boxcar_window(grid, parse_width(spec, colon, 1.0));
  fail(ErrorKind::kInvalidArgument, "unknown window '" + spec + "'");
}

}  // namespace tflab
