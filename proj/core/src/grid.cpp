// Copyright 2026 The tflab Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include "tflab/grid.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "tflab/error.hpp"
#include "tflab/version.hpp"

#ifndef TFLAB_BUILD_ID
#define TFLAB_BUILD_ID "unknown"
#endif

namespace tflab {

std::string_view build_id() noexcept { return TFLAB_BUILD_ID; }

PhaseGrid::PhaseGrid(std::size_t L)
    : L_(L),
      delta_(L > 0 ? 1.0 / std::sqrt(static_cast<double>(L)) : 0.0),
      cell_measure_(L > 0 ? 1.0 / static_cast<double>(L) : 0.0),
      side_(std::sqrt(static_cast<double>(L))) {
  require(L >= 4, "grid size L must be at least 4, got " + std::to_string(L));
}

PhaseGrid make_grid(std::size_t L) { return PhaseGrid(L); }

void require_same_grid(const PhaseGrid& a, const PhaseGrid& b, const char* what) {
  if (!(a == b)) {
    fail(ErrorKind::kInvalidArgument,
         std::string(what) + ": grid mismatch (L=" + std::to_string(a.size()) +
             " vs L=" + std::to_string(b.size()) + ")");
  }
}

Signal::Signal(const PhaseGrid& g, std::vector<cplx> v) : grid(g), values(std::move(v)) {
  require(values.size() == grid.size(),
          "signal length " + std::to_string(values.size()) + " does not match grid L=" +
              std::to_string(grid.size()));
}

double Signal::norm() const noexcept {
  double s = 0.0;
  for (const cplx& v : values) s += std::norm(v);
  return std::sqrt(s);
}

Signal impulse(const PhaseGrid& grid, std::size_t t) {
  require(t < grid.size(), "impulse position out of range");
  Signal s(grid);
  s.values[t] = 1.0;
  return s;
}

Signal hermite_signal(const PhaseGrid& grid, int k) {
  require(k >= 0, "hermite order must be nonnegative");
  const double scale = std::sqrt(2.0 * std::numbers::pi);
  // Normalized Hermite functions psi_j(u), u = sqrt(2 pi) t, by the
  // three-term recurrence.
  auto psi = [k](double u) {
    double prev = 0.0;
    double cur = std::exp(-0.5 * u * u) / std::pow(std::numbers::pi, 0.25);
    for (int j = 0; j < k; ++j) {
      const double next = std::sqrt(2.0 / (j + 1)) * u * cur -
                          std::sqrt(static_cast<double>(j) / (j + 1)) * prev;
      prev = cur;
      cur = next;
    }
    return cur;
  };

  Signal s(grid);
  double norm_sq = 0.0;
  for (std::size_t t = 0; t < grid.size(); ++t) {
    const double x = grid.coord(t);
    double v = 0.0;
    for (int j = -3; j <= 3; ++j) v += psi(scale * (x - j * grid.side()));
    s.values[t] = v;
    norm_sq += v * v;
  }
  require(norm_sq > 0.0, "hermite order too large for this grid");
  const double inv = 1.0 / std::sqrt(norm_sq);
  for (cplx& v : s.values) v *= inv;
  return s;
}

}  // namespace tflab
