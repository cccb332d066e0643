// Copyright 2026 The tflab Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include "tflab/tfa.hpp"

#include <algorithm>
#include <cmath>

#include "fft.hpp"
#include "tflab/error.hpp"

namespace tflab {
namespace {

// Calls fn(m, row) for every time shift m at which f and g(. - m) overlap;
// row holds V_g f(m, .) and is reused between calls.
template <class Fn>
void for_each_stft_row(const Signal& f, const Window& g, Fn&& fn) {
  require_same_grid(f.grid, g.grid(), "stft");
  const std::size_t L = f.size();
  const auto gv = g.values();
  const auto support = g.support();
  detail::CplxBuffer row(L);
  for (std::size_t m = 0; m < L; ++m) {
    bool any = false;
    std::fill(row.begin(), row.end(), cplx{});
    for (std::size_t d : support) {
      const std::size_t t = (m + d) % L;
      const cplx v = f.values[t] * std::conj(gv[d]);
      if (v != 0.0) {
        row[t] = v;
        any = true;
      }
    }
    if (!any) continue;
    detail::fft_inplace(row.data(), L, -1);
    fn(m, std::span<const cplx>(row.data(), L));
  }
}

}  // namespace

STFTField stft(const Signal& f, const Window& g) {
  STFTField out(f.grid);
  for_each_stft_row(f, g, [&](std::size_t m, std::span<const cplx> row) {
    std::copy(row.begin(), row.end(), out.row(m).begin());
  });
  return out;
}

SpectrogramField spectrogram(const Signal& f, const Window& g) {
  SpectrogramField out(f.grid);
  add_spectrogram(f, g, out);
  return out;
}

void add_spectrogram(const Signal& f, const Window& g, SpectrogramField& acc) {
  require_same_grid(f.grid, acc.grid(), "add_spectrogram");
  for_each_stft_row(f, g, [&](std::size_t m, std::span<const cplx> row) {
    auto dst = acc.row(m);
    for (std::size_t n = 0; n < row.size(); ++n) dst[n] += std::norm(row[n]);
  });
}

SpectrogramField ambiguity_sq(const Window& g) { return spectrogram(g.signal(), g); }

double mstar_norm(const SpectrogramField& ambiguity, MomentNorm norm) {
  const PhaseGrid& grid = ambiguity.grid();
  const std::size_t L = grid.size();
  double s = 0.0;
  for (std::size_t m = 0; m < L; ++m) {
    const double x = grid.coord(m);
    const auto row = ambiguity.row(m);
    for (std::size_t n = 0; n < L; ++n) {
      if (row[n] == 0.0) continue;
      const double xi = grid.coord(n);
      const double r = norm == MomentNorm::kL1 ? std::abs(x) + std::abs(xi) : std::hypot(x, xi);
      s += r * row[n];
    }
  }
  return grid.cell_measure() * s;
}

double mstar_norm(const Window& g, MomentNorm norm) { return mstar_norm(ambiguity_sq(g), norm); }

RealField circ_convolve(const RealField& a, const RealField& b) {
  require_same_grid(a.grid(), b.grid(), "circ_convolve");
  const std::size_t L = a.side();
  const std::size_t half = L * (L / 2 + 1);
  detail::RealBuffer ra(a.values().begin(), a.values().end());
  detail::RealBuffer rb(b.values().begin(), b.values().end());
  detail::CplxBuffer fa(half), fb(half);
  detail::rfft2(ra.data(), fa.data(), L);
  detail::rfft2(rb.data(), fb.data(), L);
  for (std::size_t i = 0; i < half; ++i) fa[i] *= fb[i];
  detail::irfft2(fa.data(), ra.data(), L);

  const double scale = a.grid().cell_measure() / static_cast<double>(L * L);
  RealField out(a.grid());
  auto dst = out.values();
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = ra[i] * scale;
  return out;
}

double field_l1(const RealField& a) {
  double s = 0.0;
  for (double v : a.values()) s += std::abs(v);
  return a.grid().cell_measure() * s;
}

double field_l1_diff(const RealField& a, const RealField& b) {
  require_same_grid(a.grid(), b.grid(), "field_l1_diff");
  const auto av = a.values();
  const auto bv = b.values();
  double s = 0.0;
  for (std::size_t i = 0; i < av.size(); ++i) s += std::abs(av[i] - bv[i]);
  return a.grid().cell_measure() * s;
}

}  // namespace tflab
