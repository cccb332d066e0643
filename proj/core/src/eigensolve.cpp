// Copyright 2026 The tflab Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include <lapacke.h>

#include "linalg.hpp"
#include "tflab/error.hpp"
#include "tflab/locop.hpp"

namespace tflab {
namespace detail {

void hermitian_eig(Eigen::MatrixXcd& a, bool want_vectors, std::vector<double>& values) {
  const auto n = static_cast<lapack_int>(a.rows());
  values.assign(static_cast<std::size_t>(n), 0.0);
  if (n == 0) return;
  const lapack_int info =
      LAPACKE_zheevd(LAPACK_COL_MAJOR, want_vectors ? 'V' : 'N', 'L', n,
                     reinterpret_cast<lapack_complex_double*>(a.data()), n, values.data());
  if (info != 0) {
    std::ostringstream msg;
    msg << "zheevd failed with info=" << info << " on a " << n << "x" << n << " block";
    fail(ErrorKind::kNumericFailure, msg.str());
  }
  // LAPACK returns ascending order.
  std::reverse(values.begin(), values.end());
  if (want_vectors) a = a.rowwise().reverse().eval();
}

void canonicalize_phase(Eigen::Ref<Eigen::VectorXcd> v) {
  const double peak = v.cwiseAbs().maxCoeff();
  if (peak == 0.0) return;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double mag = std::abs(v(i));
    if (mag >= 1e-6 * peak) {
      v *= std::conj(v(i)) / mag;
      v(i) = mag;
      return;
    }
  }
}

}  // namespace detail

EigenSystem eigh(const LocOperator& op, std::size_t vectors) {
  const std::size_t L = op.grid().size();
  CompressedMatrix c = assemble_compressed(op);
  const std::size_t n = c.index.size();
  const std::size_t keep = std::min(vectors, L);

  std::vector<double> block_values;
  detail::hermitian_eig(c.block, keep > 0, block_values);

  // Merge the block spectrum with the exact zeros of the untouched samples.
  // Entries: (value, source), source < n is a block column, otherwise the
  // basis vector e_t for the (source - n)-th untouched sample.
  std::vector<std::size_t> untouched;
  {
    std::vector<std::uint8_t> in_block(L, 0);
    for (std::size_t t : c.index) in_block[t] = 1;
    for (std::size_t t = 0; t < L; ++t) {
      if (!in_block[t]) untouched.push_back(t);
    }
  }
  std::vector<std::pair<double, std::size_t>> order;
  order.reserve(L);
  for (std::size_t i = 0; i < n; ++i) order.emplace_back(block_values[i], i);
  for (std::size_t j = 0; j < untouched.size(); ++j) order.emplace_back(0.0, n + j);
  std::stable_sort(order.begin(), order.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });

  EigenSystem out(op.grid());
  out.complete = true;
  out.eigenvalues.reserve(L);
  for (const auto& [value, src] : order) out.eigenvalues.push_back(value);

  out.eigenvectors = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(L),
                                            static_cast<Eigen::Index>(keep));
  for (std::size_t k = 0; k < keep; ++k) {
    const std::size_t src = order[k].second;
    auto col = out.eigenvectors.col(static_cast<Eigen::Index>(k));
    if (src < n) {
      for (std::size_t i = 0; i < n; ++i) {
        col(static_cast<Eigen::Index>(c.index[i])) =
            c.block(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(src));
      }
      detail::canonicalize_phase(col);
    } else {
      col(static_cast<Eigen::Index>(untouched[src - n])) = 1.0;
    }
  }
  return out;
}

namespace {

using Mat = Eigen::MatrixXcd;

void fill_random(Eigen::Ref<Eigen::VectorXcd> v, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = cplx(normal(rng), normal(rng));
}

// Orthonormalizes the columns of q in place by classical Gram-Schmidt with
// one reorthogonalization pass. Columns that collapse (the operator's range
// is smaller than the block) are replaced by fresh random directions.
void orthonormalize(Mat& q, std::mt19937_64& rng) {
  const Eigen::Index p = q.cols();
  for (Eigen::Index j = 0; j < p; ++j) {
    for (int attempt = 0;; ++attempt) {
      auto v = q.col(j);
      const double before = v.norm();
      for (int pass = 0; pass < 2 && j > 0; ++pass) {
        const Eigen::VectorXcd h = q.leftCols(j).adjoint() * v;
        v -= q.leftCols(j) * h;
      }
      const double after = v.norm();
      if (after > 1e-10 * before && after > 1e-300) {
        v /= after;
        break;
      }
      if (attempt > 8) fail(ErrorKind::kNumericFailure, "cannot complete orthonormal basis");
      fill_random(v, rng);
    }
  }
}

Mat apply_block(const LocOperator& op, const Mat& q) {
  const PhaseGrid& grid = op.grid();
  Mat y(q.rows(), q.cols());
  Signal f(grid);
  for (Eigen::Index j = 0; j < q.cols(); ++j) {
    for (Eigen::Index t = 0; t < q.rows(); ++t) f.values[static_cast<std::size_t>(t)] = q(t, j);
    const Signal hf = apply(op, f);
    for (Eigen::Index t = 0; t < q.rows(); ++t) y(t, j) = hf.values[static_cast<std::size_t>(t)];
  }
  return y;
}

}  // namespace

EigenSystem top_eigs_iterative(const LocOperator& op, std::size_t k,
                               const IterativeOptions& options) {
  const std::size_t L = op.grid().size();
  require(k >= 1, "top_eigs_iterative: k must be at least 1");
  require(k + options.oversample <= L,
          "top_eigs_iterative: k + oversample exceeds L; use eigh for the full spectrum");

  const auto rows = static_cast<Eigen::Index>(L);
  const auto p = static_cast<Eigen::Index>(k + options.oversample);
  std::mt19937_64 rng(options.seed);
  Mat q(rows, p);
  for (Eigen::Index j = 0; j < p; ++j) fill_random(q.col(j), rng);
  orthonormalize(q, rng);

  double worst = 0.0;
  for (int it = 0; it < options.max_iterations; ++it) {
    const Mat y = apply_block(op, q);
    Mat t = q.adjoint() * y;
    t = (0.5 * (t + t.adjoint())).eval();
    std::vector<double> theta;
    detail::hermitian_eig(t, true, theta);
    Mat x = q * t;
    Mat hx = y * t;

    worst = 0.0;
    for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(k); ++i) {
      const double r = (hx.col(i) - theta[static_cast<std::size_t>(i)] * x.col(i)).norm();
      worst = std::max(worst, r);
    }
    if (worst <= options.tolerance) {
      EigenSystem out(op.grid());
      out.complete = false;
      out.eigenvalues.assign(theta.begin(), theta.begin() + static_cast<long>(k));
      out.eigenvectors = x.leftCols(static_cast<Eigen::Index>(k));
      for (Eigen::Index i = 0; i < out.eigenvectors.cols(); ++i) {
        detail::canonicalize_phase(out.eigenvectors.col(i));
      }
      return out;
    }
    q = std::move(hx);
    orthonormalize(q, rng);
  }
  std::ostringstream msg;
  msg << "subspace iteration did not converge in " << options.max_iterations
      << " iterations (k=" << k << ", worst residual " << worst << ")";
  fail(ErrorKind::kNumericFailure, msg.str());
}

double max_residual(const LocOperator& op, const EigenSystem& eigs) {
  double worst = 0.0;
  for (std::size_t k = 0; k < eigs.vector_count(); ++k) {
    const Signal h = eigs.vector(k);
    const Signal hh = apply(op, h);
    double s = 0.0;
    for (std::size_t t = 0; t < h.size(); ++t) {
      s += std::norm(hh.values[t] - eigs.eigenvalues[k] * h.values[t]);
    }
    worst = std::max(worst, std::sqrt(s));
  }
  return worst;
}

double orthonormality_error(const EigenSystem& eigs) {
  const Eigen::MatrixXcd gram = eigs.eigenvectors.adjoint() * eigs.eigenvectors;
  return (gram - Eigen::MatrixXcd::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff();
}

}  // namespace tflab
