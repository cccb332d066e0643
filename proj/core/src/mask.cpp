// Copyright 2026 The tflab Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include "tflab/mask.hpp"

#include <cmath>
#include <string>

#include "tflab/error.hpp"

namespace tflab {

DomainMask::DomainMask(const PhaseGrid& grid) : grid_(grid), cells_(grid.cells(), 0) {}

DomainMask::DomainMask(const PhaseGrid& grid, std::vector<std::uint8_t> cells)
    : grid_(grid), cells_(std::move(cells)) {
  require(cells_.size() == grid_.cells(), "mask size does not match grid");
  const std::size_t L = grid_.size();
  for (std::uint8_t& c : cells_) c = c ? 1 : 0;
  for (std::size_t m = 0; m < L; ++m) {
    const std::size_t down = (m + 1) % L;
    for (std::size_t n = 0; n < L; ++n) {
      const std::uint8_t c = cells_[m * L + n];
      count_ += c;
      edges_ += c != cells_[down * L + n];
      edges_ += c != cells_[m * L + (n + 1) % L];
    }
  }
}

RealField DomainMask::indicator() const {
  RealField f(grid_);
  auto out = f.values();
  for (std::size_t i = 0; i < cells_.size(); ++i) out[i] = cells_[i];
  return f;
}

DomainMask DomainMask::translated(long dm, long dn) const {
  const std::size_t L = grid_.size();
  std::vector<std::uint8_t> out(cells_.size());
  for (std::size_t m = 0; m < L; ++m) {
    const std::size_t tm = grid_.wrap(static_cast<long>(m) + dm);
    for (std::size_t n = 0; n < L; ++n) {
      out[tm * L + grid_.wrap(static_cast<long>(n) + dn)] = cells_[m * L + n];
    }
  }
  return DomainMask(grid_, std::move(out));
}

SymbolField::SymbolField(RealField values) : values_(std::move(values)) {
  for (double v : values_.values()) {
    require(std::isfinite(v) && v >= 0.0 && v <= 1.0, "symbol entries must lie in [0, 1]");
  }
}

SymbolField SymbolField::from_mask(const DomainMask& mask) {
  return SymbolField(mask.indicator());
}

DomainMask disk_mask(const PhaseGrid& grid, Point2 center, double R) {
  require(std::isfinite(R) && R >= 0.0, "disk radius must be nonnegative");
  const double half = 0.5 * grid.side();
  const double reach = R + 2.0 * grid.delta();
  for (double c : {center.first, center.second}) {
    if (c - reach < -half || c + reach >= half) {
      fail(ErrorKind::kDomainOverflow,
           "disk of radius " + std::to_string(R) + " does not fit in the torus of side " +
               std::to_string(grid.side()));
    }
  }
  const std::size_t L = grid.size();
  std::vector<std::uint8_t> cells(grid.cells(), 0);
  if (R > 0.0) {
    const double r2 = R * R;
    for (std::size_t m = 0; m < L; ++m) {
      const double dx = grid.coord(m) - center.first;
      if (dx * dx > r2) continue;
      for (std::size_t n = 0; n < L; ++n) {
        const double dy = grid.coord(n) - center.second;
        cells[m * L + n] = dx * dx + dy * dy <= r2;
      }
    }
  }
  return DomainMask(grid, std::move(cells));
}

DomainMask rectangle_mask(const PhaseGrid& grid, long m0, long n0, std::size_t rows,
                          std::size_t cols) {
  const std::size_t L = grid.size();
  require(rows <= L && cols <= L, "rectangle larger than the grid");
  std::vector<std::uint8_t> cells(grid.cells(), 0);
  for (std::size_t i = 0; i < rows; ++i) {
    const std::size_t m = grid.wrap(m0 + static_cast<long>(i));
    for (std::size_t j = 0; j < cols; ++j) {
      cells[m * L + grid.wrap(n0 + static_cast<long>(j))] = 1;
    }
  }
  return DomainMask(grid, std::move(cells));
}

DomainMask lshape_mask(const PhaseGrid& grid, std::size_t arm, std::size_t cut) {
  require(cut < arm && arm <= grid.size(), "L-shape needs cut < arm <= L");
  const std::size_t L = grid.size();
  const long origin = -static_cast<long>(arm / 2);
  std::vector<std::uint8_t> cells(grid.cells(), 0);
  for (std::size_t i = 0; i < arm; ++i) {
    for (std::size_t j = 0; j < arm; ++j) {
      if (i >= arm - cut && j >= arm - cut) continue;
      cells[grid.wrap(origin + static_cast<long>(i)) * L +
            grid.wrap(origin + static_cast<long>(j))] = 1;
    }
  }
  return DomainMask(grid, std::move(cells));
}

DomainMask blob_mask(const PhaseGrid& grid, int blobs, std::mt19937_64& rng) {
  require(blobs >= 0, "blob count must be nonnegative");
  const double side = grid.side();
  std::uniform_real_distribution<double> centre(-0.25 * side, 0.25 * side);
  std::uniform_real_distribution<double> radius(0.05 * side, 0.12 * side);
  std::vector<std::uint8_t> cells(grid.cells(), 0);
  for (int b = 0; b < blobs; ++b) {
    const double cx = centre(rng);
    const double cy = centre(rng);
    const double r = radius(rng);
    const DomainMask disk = disk_mask(grid, {cx, cy}, r);
    const auto src = disk.cells();
    for (std::size_t i = 0; i < cells.size(); ++i) cells[i] |= src[i];
  }
  return DomainMask(grid, std::move(cells));
}

DomainMask random_mask(const PhaseGrid& grid, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> density(0.05, 0.5);
  std::bernoulli_distribution cell(density(rng));
  std::vector<std::uint8_t> cells(grid.cells(), 0);
  for (auto& c : cells) c = cell(rng);
  return DomainMask(grid, std::move(cells));
}

DomainMask full_mask(const PhaseGrid& grid) {
  return DomainMask(grid, std::vector<std::uint8_t>(grid.cells(), 1));
}

double variation(const RealField& field) {
  const std::size_t L = field.side();
  double s = 0.0;
  for (std::size_t m = 0; m < L; ++m) {
    const std::size_t down = (m + 1) % L;
    for (std::size_t n = 0; n < L; ++n) {
      const double v = field(m, n);
      s += std::abs(field(down, n) - v) + std::abs(field(m, (n + 1) % L) - v);
    }
  }
  return field.grid().delta() * s;
}

}  // namespace tflab
