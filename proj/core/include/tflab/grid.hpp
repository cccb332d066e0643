// Copyright 2026 The tflab Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace tflab {

using cplx = std::complex<double>;

/// Discrete phase space: an L x L torus of side sqrt(L) with equal time and
/// frequency steps delta = 1/sqrt(L). Each lattice cell has measure 1/L.
class PhaseGrid {
 public:
  /// Throws invalid-argument for L < 4.
  explicit PhaseGrid(std::size_t L);

  std::size_t size() const noexcept { return L_; }
  std::size_t cells() const noexcept { return L_ * L_; }
  double delta() const noexcept { return delta_; }
  double cell_measure() const noexcept { return cell_measure_; }
  /// Side length of the torus, sqrt(L).
  double side() const noexcept { return side_; }

  /// Signed representative of idx in (-L/2, L/2], wrapped so that the result
  /// lies in [-L/2, L/2).
  long centered_index(std::size_t idx) const noexcept {
    const long i = static_cast<long>(idx % L_);
    const long L = static_cast<long>(L_);
    return i < (L + 1) / 2 ? i : i - L;
  }

  /// Continuous coordinate of lattice index idx in [-side/2, side/2).
  double coord(std::size_t idx) const noexcept {
    return static_cast<double>(centered_index(idx)) * delta_;
  }

  /// Lattice index for a signed offset, reduced mod L.
  std::size_t wrap(long idx) const noexcept {
    const long L = static_cast<long>(L_);
    long r = idx % L;
    return static_cast<std::size_t>(r < 0 ? r + L : r);
  }

  friend bool operator==(const PhaseGrid& a, const PhaseGrid& b) noexcept {
    return a.L_ == b.L_;
  }

 private:
  std::size_t L_;
  double delta_;
  double cell_measure_;
  double side_;
};

PhaseGrid make_grid(std::size_t L);

/// Throws invalid-argument naming `what` when the grids differ.
void require_same_grid(const PhaseGrid& a, const PhaseGrid& b, const char* what);

/// Dense L x L array over the phase-space lattice. Row index m is the time
/// shift, column index n the frequency shift; storage is row-major with
/// (0, 0) at the origin z = 0.
template <class T>
class Field {
 public:
  explicit Field(const PhaseGrid& grid, T fill = T{})
      : grid_(grid), data_(grid.cells(), fill) {}

  Field(const PhaseGrid& grid, std::vector<T> data)
      : grid_(grid), data_(std::move(data)) {
    if (data_.size() != grid_.cells()) data_.resize(grid_.cells());
  }

  const PhaseGrid& grid() const noexcept { return grid_; }
  std::size_t side() const noexcept { return grid_.size(); }

  T& operator()(std::size_t m, std::size_t n) noexcept {
    return data_[m * grid_.size() + n];
  }
  const T& operator()(std::size_t m, std::size_t n) const noexcept {
    return data_[m * grid_.size() + n];
  }

  std::span<T> row(std::size_t m) noexcept {
    return {data_.data() + m * grid_.size(), grid_.size()};
  }
  std::span<const T> row(std::size_t m) const noexcept {
    return {data_.data() + m * grid_.size(), grid_.size()};
  }

  std::span<T> values() noexcept { return data_; }
  std::span<const T> values() const noexcept { return data_; }

 private:
  PhaseGrid grid_;
  std::vector<T> data_;
};

using RealField = Field<double>;
using ComplexField = Field<cplx>;

/// Nonnegative field: |V_g f|^2 or an accumulated spectrogram.
using SpectrogramField = RealField;
/// V_g f sampled on the full lattice.
using STFTField = ComplexField;

/// Finite model of a signal in L^2(R): a vector in C^L on a phase grid.
struct Signal {
  PhaseGrid grid;
  std::vector<cplx> values;

  explicit Signal(const PhaseGrid& g) : grid(g), values(g.size()) {}
  Signal(const PhaseGrid& g, std::vector<cplx> v);

  std::size_t size() const noexcept { return values.size(); }
  double norm() const noexcept;
};

/// Unit impulse at sample t.
Signal impulse(const PhaseGrid& grid, std::size_t t = 0);

/// Sampled, periodized Hermite function h_k(t / sqrt(L)), normalized to unit
/// Euclidean norm. k = 0 is the Gaussian.
Signal hermite_signal(const PhaseGrid& grid, int k);

}  // namespace tflab
