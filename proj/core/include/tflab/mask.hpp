// Copyright 2026 The tflab Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "tflab/grid.hpp"

namespace tflab {

/// Boolean phase-space domain Omega on the lattice. Area and perimeter are
/// measured in continuous units: area = #cells / L, perimeter = number of
/// 4-neighbour toroidal edges separating an inside cell from an outside cell,
/// times delta.
class DomainMask {
 public:
  /// Empty mask.
  explicit DomainMask(const PhaseGrid& grid);
  DomainMask(const PhaseGrid& grid, std::vector<std::uint8_t> cells);

  const PhaseGrid& grid() const noexcept { return grid_; }
  bool operator()(std::size_t m, std::size_t n) const noexcept {
    return cells_[m * grid_.size() + n] != 0;
  }
  std::span<const std::uint8_t> cells() const noexcept { return cells_; }

  std::size_t count() const noexcept { return count_; }
  std::size_t boundary_edges() const noexcept { return edges_; }
  double area() const noexcept { return count_ * grid_.cell_measure(); }
  double perimeter() const noexcept { return edges_ * grid_.delta(); }
  bool empty() const noexcept { return count_ == 0; }
  bool full() const noexcept { return count_ == grid_.cells(); }

  /// 0/1 indicator field.
  RealField indicator() const;

  /// Toroidal translation by (dm, dn) lattice steps.
  DomainMask translated(long dm, long dn) const;

 private:
  PhaseGrid grid_;
  std::vector<std::uint8_t> cells_;
  std::size_t count_ = 0;
  std::size_t edges_ = 0;
};

/// Real symbol with every entry in [0, 1].
class SymbolField {
 public:
  /// Throws invalid-argument if any entry leaves [0, 1] or is not finite.
  explicit SymbolField(RealField values);
  static SymbolField from_mask(const DomainMask& mask);

  const RealField& values() const noexcept { return values_; }
  const PhaseGrid& grid() const noexcept { return values_.grid(); }

 private:
  RealField values_;
};

using Point2 = std::pair<double, double>;

/// Cells whose centred coordinate lies within distance R of `center`.
/// Throws domain-overflow if the disk of radius R + 2 delta does not fit in
/// the fundamental domain [-side/2, side/2)^2.
DomainMask disk_mask(const PhaseGrid& grid, Point2 center, double R);

/// Axis-aligned rectangle of `rows` x `cols` lattice cells whose lower
/// corner sits at lattice offset (m0, n0) (signed, centred indexing).
DomainMask rectangle_mask(const PhaseGrid& grid, long m0, long n0,
                          std::size_t rows, std::size_t cols);

/// Square of side `arm` cells with a `cut` x `cut` quadrant removed.
DomainMask lshape_mask(const PhaseGrid& grid, std::size_t arm, std::size_t cut);

/// Union of `blobs` disks with random centres and radii drawn from `rng`,
/// confined to the central half of the torus.
DomainMask blob_mask(const PhaseGrid& grid, int blobs, std::mt19937_64& rng);

/// Independent Bernoulli cells with density drawn in [0.05, 0.5].
DomainMask random_mask(const PhaseGrid& grid, std::mt19937_64& rng);

DomainMask full_mask(const PhaseGrid& grid);

/// Anisotropic total variation:
///   delta * sum_{m,n} |F(m+1,n) - F(m,n)| + |F(m,n+1) - F(m,n)|
/// with toroidal indexing. Equals DomainMask::perimeter on indicators.
double variation(const RealField& field);

}  // namespace tflab
