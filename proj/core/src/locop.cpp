// Copyright 2026 The tflab Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include "tflab/locop.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fft.hpp"
#include "linalg.hpp"
#include "tflab/error.hpp"
#include "tflab/tfa.hpp"

namespace tflab {

LocOperator::LocOperator(Window window, const DomainMask& mask)
    : LocOperator(std::move(window), mask.indicator(), 0) {
  require_same_grid(window_.grid(), mask.grid(), "LocOperator");
}

LocOperator::LocOperator(Window window, const SymbolField& symbol)
    : LocOperator(std::move(window), symbol.values(), 0) {}

LocOperator LocOperator::general(Window window, RealField symbol) {
  for (double v : symbol.values()) require(std::isfinite(v), "symbol entries must be finite");
  return LocOperator(std::move(window), std::move(symbol), 0);
}

LocOperator::LocOperator(Window window, RealField symbol, int)
    : window_(std::move(window)), symbol_(std::move(symbol)) {
  require_same_grid(window_.grid(), symbol_.grid(), "LocOperator");
  const std::size_t L = symbol_.side();
  boolean_ = true;
  for (double v : symbol_.values()) {
    if (v != 0.0 && v != 1.0) {
      boolean_ = false;
      break;
    }
  }
  std::vector<std::uint8_t> touched(L, 0);
  for (std::size_t m = 0; m < L; ++m) {
    const auto row = symbol_.row(m);
    if (std::none_of(row.begin(), row.end(), [](double v) { return v != 0.0; })) continue;
    rows_.push_back(m);
    for (std::size_t d : window_.support()) touched[(m + d) % L] = 1;
  }
  for (std::size_t t = 0; t < L; ++t) {
    if (touched[t]) times_.push_back(t);
  }
}

Signal apply(const LocOperator& op, const Signal& f) {
  require_same_grid(op.grid(), f.grid, "apply");
  const std::size_t L = f.size();
  const double inv_L = op.grid().cell_measure();
  const auto g = op.window().values();
  const auto support = op.window().support();
  Signal out(f.grid);
  detail::CplxBuffer buf(L);
  for (std::size_t m : op.active_rows()) {
    std::fill(buf.begin(), buf.end(), cplx{});
    bool any = false;
    for (std::size_t d : support) {
      const std::size_t t = (m + d) % L;
      buf[t] = f.values[t] * std::conj(g[d]);
      any = any || buf[t] != 0.0;
    }
    if (!any) continue;
    detail::fft_inplace(buf.data(), L, -1);
    const auto sym = op.symbol().row(m);
    for (std::size_t n = 0; n < L; ++n) buf[n] *= sym[n] * inv_L;
    detail::fft_inplace(buf.data(), L, +1);
    for (std::size_t d : support) {
      const std::size_t t = (m + d) % L;
      out.values[t] += buf[t] * g[d];
    }
  }
  return out;
}

CompressedMatrix assemble_compressed(const LocOperator& op) {
  const std::size_t L = op.grid().size();
  if (L > kDenseLimit) {
    fail(ErrorKind::kResourceLimit,
         "dense assembly limited to L <= " + std::to_string(kDenseLimit));
  }
  CompressedMatrix out;
  out.index = op.active_times();
  const std::size_t n = out.index.size();
  out.block = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  if (n == 0) return out;

  std::vector<Eigen::Index> pos(L, -1);
  for (std::size_t i = 0; i < n; ++i) pos[out.index[i]] = static_cast<Eigen::Index>(i);

  const auto g = op.window().values();
  const auto support = op.window().support();
  const double inv_L = op.grid().cell_measure();
  detail::CplxBuffer kernel(L);
  for (std::size_t m : op.active_rows()) {
    // kernel(k) = sum_n symbol(m, n) exp(2 pi i n k / L)
    const auto sym = op.symbol().row(m);
    std::copy(sym.begin(), sym.end(), kernel.begin());
    detail::fft_inplace(kernel.data(), L, +1);
    for (std::size_t d2 : support) {
      const Eigen::Index col = pos[(m + d2) % L];
      const cplx gs = std::conj(g[d2]) * inv_L;
      for (std::size_t d1 : support) {
        const Eigen::Index row = pos[(m + d1) % L];
        out.block(row, col) += g[d1] * gs * kernel[(d1 + L - d2) % L];
      }
    }
  }
  // Round-off leaves the two triangles a few ulps apart.
  Eigen::MatrixXcd herm = 0.5 * (out.block + out.block.adjoint());
  out.block = std::move(herm);
  return out;
}

Eigen::MatrixXcd assemble(const LocOperator& op) {
  const CompressedMatrix c = assemble_compressed(op);
  const auto L = static_cast<Eigen::Index>(op.grid().size());
  Eigen::MatrixXcd full = Eigen::MatrixXcd::Zero(L, L);
  const auto n = static_cast<Eigen::Index>(c.index.size());
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i < n; ++i) {
      full(static_cast<Eigen::Index>(c.index[i]), static_cast<Eigen::Index>(c.index[j])) =
          c.block(i, j);
    }
  }
  return full;
}

double trace_symbol(const LocOperator& op) {
  double s = 0.0;
  for (double v : op.symbol().values()) s += v;
  return op.grid().cell_measure() * s;
}

double trace_square_ambiguity(const LocOperator& op) {
  if (!op.boolean()) {
    fail(ErrorKind::kUnsupportedSymbol,
         "trace_square_ambiguity needs a 0/1 symbol; use frobenius_sq(assemble(op))");
  }
  const RealField smooth = circ_convolve(op.symbol(), ambiguity_sq(op.window()));
  const auto ind = op.symbol().values();
  const auto conv = smooth.values();
  double s = 0.0;
  for (std::size_t i = 0; i < ind.size(); ++i) {
    if (ind[i] != 0.0) s += conv[i];
  }
  return op.grid().cell_measure() * s;
}

double frobenius_sq(const Eigen::MatrixXcd& m) { return m.squaredNorm(); }

Signal EigenSystem::vector(std::size_t k) const {
  require(k < vector_count(), "eigenvector index out of range");
  Signal s(grid);
  const auto col = eigenvectors.col(static_cast<Eigen::Index>(k));
  for (std::size_t t = 0; t < s.size(); ++t) s.values[t] = col(static_cast<Eigen::Index>(t));
  return s;
}

double trace_norm_diff(const LocOperator& a, const LocOperator& b) {
  require_same_grid(a.grid(), b.grid(), "trace_norm_diff");
  const auto ga = a.window().values();
  const auto gb = b.window().values();
  require(std::equal(ga.begin(), ga.end(), gb.begin(), gb.end()),
          "trace_norm_diff: operators must share the window");
  RealField diff(a.grid());
  auto dst = diff.values();
  const auto sa = a.symbol().values();
  const auto sb = b.symbol().values();
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = sa[i] - sb[i];
  const LocOperator op = LocOperator::general(a.window(), std::move(diff));
  CompressedMatrix c = assemble_compressed(op);
  std::vector<double> values;
  detail::hermitian_eig(c.block, false, values);
  double s = 0.0;
  for (double v : values) s += std::abs(v);
  return s;
}

}  // namespace tflab
