// Copyright 2026 The tflab Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include <Eigen/Dense>

#include "tflab/grid.hpp"
#include "tflab/mask.hpp"
#include "tflab/window.hpp"

namespace tflab {

/// Time-frequency localization operator
///
///   H_m f(t) = (1/L) sum_{m,n} m(m,n) V_g f(m,n) g(t - m) exp(2 pi i n t / L).
///
/// The symbol is an arbitrary real field; masks and [0,1] symbol fields are
/// the usual cases and signed symbols appear for operator differences.
class LocOperator {
 public:
  LocOperator(Window window, const DomainMask& mask);
  LocOperator(Window window, const SymbolField& symbol);
  /// Any finite real symbol, possibly signed.
  static LocOperator general(Window window, RealField symbol);

  const Window& window() const noexcept { return window_; }
  const PhaseGrid& grid() const noexcept { return window_.grid(); }
  const RealField& symbol() const noexcept { return symbol_; }
  /// True when every symbol entry is exactly 0 or 1.
  bool boolean() const noexcept { return boolean_; }

  /// Time shifts m whose symbol row has a nonzero entry.
  const std::vector<std::size_t>& active_rows() const noexcept { return rows_; }
  /// Sample indices t touched by the operator: outside this set the matrix
  /// row and column vanish identically.
  const std::vector<std::size_t>& active_times() const noexcept { return times_; }

 private:
  LocOperator(Window window, RealField symbol, int);

  Window window_;
  RealField symbol_;
  bool boolean_ = false;
  std::vector<std::size_t> rows_;
  std::vector<std::size_t> times_;
};

/// Matrix-free application, O(L^2 log L) worst case.
Signal apply(const LocOperator& op, const Signal& f);

/// Largest L accepted by the dense paths.
inline constexpr std::size_t kDenseLimit = 4096;

/// Full L x L Hermitian matrix. Throws resource-limit above kDenseLimit.
Eigen::MatrixXcd assemble(const LocOperator& op);

/// The operator restricted to its active times: H = P^T block P where P
/// selects `index`. Everything outside the block is exactly zero.
struct CompressedMatrix {
  std::vector<std::size_t> index;
  Eigen::MatrixXcd block;
};
CompressedMatrix assemble_compressed(const LocOperator& op);

/// cell_measure * sum of the symbol; the exact trace of H.
double trace_symbol(const LocOperator& op);

/// trace(H^2) for a mask symbol, computed as
///   cell_measure * sum_Omega (1_Omega * |V_g g|^2)
/// by FFT convolution. Throws unsupported-symbol for non-boolean symbols.
double trace_square_ambiguity(const LocOperator& op);

/// Squared Frobenius norm of a dense matrix, equal to trace(H^2) for
/// Hermitian H.
double frobenius_sq(const Eigen::MatrixXcd& m);

/// Eigenpairs in descending order. Vectors are columns of `eigenvectors`
/// (L x vector_count) aligned with the leading eigenvalues.
struct EigenSystem {
  PhaseGrid grid;
  std::vector<double> eigenvalues;
  Eigen::MatrixXcd eigenvectors;
  /// True when `eigenvalues` is the whole spectrum (L values).
  bool complete = false;

  explicit EigenSystem(const PhaseGrid& g) : grid(g) {}

  std::size_t count() const noexcept { return eigenvalues.size(); }
  std::size_t vector_count() const noexcept {
    return static_cast<std::size_t>(eigenvectors.cols());
  }
  Signal vector(std::size_t k) const;
};

inline constexpr std::size_t kAllVectors = std::numeric_limits<std::size_t>::max();

/// Full spectrum via a dense Hermitian solver on the compressed block. Only
/// the leading `vectors` eigenvectors are materialized. Each eigenvector has
/// its first significant component rotated to the positive real axis.
/// Throws numeric-failure if the solver does not converge.
EigenSystem eigh(const LocOperator& op, std::size_t vectors = kAllVectors);

struct IterativeOptions {
  /// Extra block columns beyond k; the solver requires k + oversample <= L.
  std::size_t oversample = 10;
  double tolerance = 1e-10;
  int max_iterations = 300;
  std::uint64_t seed = 0;
};

/// Leading k eigenpairs by block subspace iteration with Rayleigh-Ritz,
/// using `apply` as a black box. k must satisfy 1 <= k and
/// k + oversample <= L; k = L is rejected with invalid-argument (use eigh).
/// Throws numeric-failure when max_iterations is exhausted.
EigenSystem top_eigs_iterative(const LocOperator& op, std::size_t k,
                               const IterativeOptions& options = {});

/// Trace norm ||H_a - H_b||_{S^1}, via the eigenvalues of the operator
/// with symbol a - b. Both operators must share window and grid.
double trace_norm_diff(const LocOperator& a, const LocOperator& b);

/// max_k ||H h_k - lambda_k h_k||_2 over materialized eigenvectors.
double max_residual(const LocOperator& op, const EigenSystem& eigs);
/// max_{i,j} |<h_i, h_j> - delta_ij|.
double orthonormality_error(const EigenSystem& eigs);

}  // namespace tflab
