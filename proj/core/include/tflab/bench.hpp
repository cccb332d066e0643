// Copyright 2026 The tflab Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tflab/accspec.hpp"
#include "tflab/mask.hpp"
#include "tflab/window.hpp"

namespace tflab::bench {

struct NamedMask {
  std::string name;
  DomainMask mask;
};

/// Regression domains sized to the grid: disk, square, 4:1 rectangle,
/// L-shape and `blob_masks` masks built from 10 random disks each.
std::vector<NamedMask> regression_corpus(const PhaseGrid& grid, std::uint64_t seed = 0,
                                         int blob_masks = 10);

/// The three window classes the checks are run with.
std::vector<Window> corpus_windows(const PhaseGrid& grid);

struct LogLogFit {
  double slope = 0.0;
  double intercept = 0.0;
  /// RMS of the residuals in log space.
  double residual = 0.0;
};

/// Least squares line through (ln x, ln y). Needs at least two points with
/// distinct positive x and positive y.
LogLogFit fit_loglog(const std::vector<std::pair<double, double>>& points);

struct LemmaCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  bool pass = false;
};

/// ||1_Omega * |V_g g|^2 - 1_Omega||_1 <= perimeter * ||g||^2_{M*} (l1).
LemmaCheck lemma_var_check(const DomainMask& mask, const Window& g);

struct InequalityCheck {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  bool pass = false;
};

struct InequalityReport {
  PlungeStats stats;
  double mstar = 0.0;
  double l1_error = 0.0;
  double l1_error_identity = 0.0;
  double trace_norm = 0.0;
  std::vector<InequalityCheck> checks;

  bool all_pass() const;
};

inline constexpr double kInequalitySlack = 1e-8;

/// Evaluates the five discrete inequalities for one (mask, window) pair:
///   deficit in [0, mstar * perimeter], eigen_deficit <= deficit,
///   l1_error <= 1 + 2 eigen_deficit, l1_error >= deficit and
///   ||H_rho - H_Omega||_{S^1} <= l1_error.
/// A violated inequality is recorded, never thrown.
InequalityReport inequality_suite(const DomainMask& mask, const Window& g);

enum class Solver { kDense, kIterative };

struct SweepConfig {
  std::vector<double> radii{2.0, 2.5, 3.0, 4.0, 5.0, 6.0};
  std::size_t L = 4096;
  std::string window = "gaussian";
  Solver solver = Solver::kDense;
  /// Extra eigenpairs requested from the iterative solver beyond A_Omega.
  std::size_t margin = 64;
  std::string out_dir;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  bool heatmaps = true;
  double plunge_delta = kDefaultPlungeDelta;
};

struct RateRecord {
  double R = 0.0;
  std::size_t L = 0;
  double area = 0.0;
  double perimeter = 0.0;
  std::size_t a_omega = 0;
  double l1_error = 0.0;
  double l1_error_identity = 0.0;
  double trace = 0.0;
  double trace_sq = 0.0;
  double deficit = 0.0;
  double eigen_deficit = 0.0;
  std::size_t mid_count = 0;
  bool spectrum_complete = true;
  bool degenerate_cutoff = false;
  double runtime_s = 0.0;
};

struct Band {
  double min = 0.0;
  double max = 0.0;
};

struct RateReport {
  std::vector<RateRecord> records;
  std::optional<LogLogFit> fit;
  Band l1_per_perimeter;
  Band deficit_per_radius;
  /// l1_error / sqrt(perimeter * area) per record.
  std::vector<double> old_bound_ratio;
  double mstar_l1 = 0.0;
  double mstar_l2 = 0.0;
  std::vector<std::string> warnings;
};

/// Runs every radius, fits the log-log slope and, when out_dir is set,
/// writes sweep.csv, rate_report.json, stats_R<R>.json and heatmaps.
/// Throws domain-overflow if the largest disk does not fit.
RateReport run_rate_sweep(const SweepConfig& config);

/// Evaluates a single radius without writing anything.
RateRecord sweep_point(const SweepConfig& config, const Window& g, double R,
                       SpectrogramField* rho_out = nullptr);

}  // namespace tflab::bench
