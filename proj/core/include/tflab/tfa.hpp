// Copyright 2026 The tflab Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#pragma once

#include "tflab/grid.hpp"
#include "tflab/window.hpp"

namespace tflab {

/// Discrete short-time Fourier transform on the full L x L lattice:
///
///   V_g f(m, n) = sum_t f(t) conj(g(t - m)) exp(-2 pi i n t / L).
///
/// One length-L FFT per time shift m. Rows where f and the shifted window do
/// not overlap are left at zero without running the FFT.
STFTField stft(const Signal& f, const Window& g);

/// |V_g f|^2.
SpectrogramField spectrogram(const Signal& f, const Window& g);

/// Adds |V_g f|^2 into `acc` in place; used to accumulate many spectrograms
/// without materializing each one.
void add_spectrogram(const Signal& f, const Window& g, SpectrogramField& acc);

/// |V_g g|^2 with entry (0, 0) at z = 0. Integrates to ||g||^4 = 1.
SpectrogramField ambiguity_sq(const Window& g);

enum class MomentNorm { kL1, kL2 };

/// Window concentration ||g||^2_{M*} = cell_measure * sum |z| |V_g g(z)|^2
/// over centred coordinates. The default l1 norm |x| + |xi| is the one that
/// makes the discrete convolution lemma exact; l2 is provided for reporting.
double mstar_norm(const Window& g, MomentNorm norm = MomentNorm::kL1);

/// Same moment for a precomputed |V_g g|^2.
double mstar_norm(const SpectrogramField& ambiguity, MomentNorm norm = MomentNorm::kL1);

/// Toroidal convolution with measure weight:
///   (a * b)(u) = cell_measure * sum_v a(v) b(u - v).
RealField circ_convolve(const RealField& a, const RealField& b);

/// cell_measure * sum |a|.
double field_l1(const RealField& a);
/// cell_measure * sum |a - b|.
double field_l1_diff(const RealField& a, const RealField& b);

}  // namespace tflab
