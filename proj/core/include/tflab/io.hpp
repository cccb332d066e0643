// Copyright 2026 The tflab Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#pragma once

#include <filesystem>
#include <string>

#include "tflab/accspec.hpp"
#include "tflab/grid.hpp"
#include "tflab/locop.hpp"
#include "tflab/mask.hpp"
#include "tflab/window.hpp"

// File formats exchanged with the outside world. Images and field CSVs use the
// display layout: row i is time coordinate (i - L/2) * delta and column j is
// frequency coordinate (j - L/2) * delta, so the origin sits at pixel
// (L/2, L/2). In-memory fields keep the origin at (0, 0).
namespace tflab::io {

namespace fs = std::filesystem;

/// Shortest round-trip decimal form ("%.17g"), locale independent.
std::string format_double(double v);

/// Row-major CSV: header line "L,delta", one line with their values, then L
/// lines of L values.
void write_field_csv(const fs::path& path, const RealField& field);
RealField read_field_csv(const fs::path& path);

/// 16-bit binary PGM (P5, maxval 65535), min-max scaled. The scaling is
/// recorded in `<path>.json` as {"L", "delta", "min", "max", "maxval"}.
void write_field_pgm(const fs::path& path, const RealField& field);

/// PBM (P1 or P4) of size L x L; black pixels are inside the mask.
DomainMask read_mask_pbm(const fs::path& path, const PhaseGrid& grid);
void write_mask_pbm(const fs::path& path, const DomainMask& mask, bool binary = true);

/// JSON descriptor. Supported shapes:
///   {"shape":"disk","R":2,"center":[0,0]}
///   {"shape":"rectangle","rows":..,"cols":..,"origin":[m0,n0]}
///   {"shape":"lshape","arm":..,"cut":..}
///   {"shape":"blobs","count":10,"seed":0}
///   {"shape":"full"}
DomainMask mask_from_json(const std::string& text, const PhaseGrid& grid);

/// Dispatches on content: PBM magic "P1"/"P4" or a JSON object.
DomainMask load_mask(const fs::path& path, const PhaseGrid& grid);

/// One sample per line, "re" or "re,im". Throws invalid-argument when the
/// sample count differs from L.
Signal read_signal_csv(const fs::path& path, const PhaseGrid& grid);

/// Window samples in the same format as read_signal_csv, normalized.
Window read_window_file(const fs::path& path, const PhaseGrid& grid);

/// "k,lambda" with k starting at 1.
void write_eigenvalues_csv(const fs::path& path, const EigenSystem& eigs);

/// Eigenvectors as raw little-endian complex doubles (re, im), L per vector,
/// in `<stem>.bin`, described by `<stem>.json`.
void write_eigenvectors(const fs::path& stem, const EigenSystem& eigs);

/// {area, perimeter, A, trace, trace_sq, deficit, eigen_deficit, l1_error,
///  mid_count} as a JSON object.
std::string stats_json(const PlungeStats& stats, double l1_error);

void write_text(const fs::path& path, const std::string& text);
std::string read_text(const fs::path& path);

}  // namespace tflab::io
