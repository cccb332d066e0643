// Copyright 2026 The tflab Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include "tflab/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "tflab/error.hpp"
#include "tflab/io.hpp"
#include "tflab/locop.hpp"
#include "tflab/tfa.hpp"

namespace tflab::bench {
namespace {

using json = nlohmann::ordered_json;

std::string radius_tag(double R) {
  std::ostringstream s;
  s << R;
  return s.str();
}

Window sweep_window(const PhaseGrid& grid, const std::string& spec) {
  if (spec.rfind("file:", 0) == 0) return io::read_window_file(spec.substr(5), grid);
  return window_from_spec(grid, spec);
}

json record_json(const RateRecord& r) {
  json j;
  j["R"] = r.R;
  j["L"] = r.L;
  j["area"] = r.area;
  j["perimeter"] = r.perimeter;
  j["A"] = r.a_omega;
  j["l1_error"] = r.l1_error;
  j["l1_error_identity"] = r.l1_error_identity;
  j["trace"] = r.trace;
  j["trace_sq"] = r.trace_sq;
  j["deficit"] = r.deficit;
  j["eigen_deficit"] = r.eigen_deficit;
  j["mid_count"] = r.mid_count;
  j["spectrum_complete"] = r.spectrum_complete;
  j["degenerate_cutoff"] = r.degenerate_cutoff;
  j["runtime_s"] = r.runtime_s;
  return j;
}

}  // namespace

LogLogFit fit_loglog(const std::vector<std::pair<double, double>>& points) {
  require(points.size() >= 2, "fit_loglog needs at least two points");
  std::set<double> xs;
  for (const auto& [x, y] : points) {
    require(x > 0.0 && y > 0.0, "fit_loglog needs positive coordinates");
    require(xs.insert(x).second, "fit_loglog: duplicate x value");
  }
  const double n = static_cast<double>(points.size());
  double sx = 0.0, sy = 0.0;
  for (const auto& [x, y] : points) {
    sx += std::log(x);
    sy += std::log(y);
  }
  const double mx = sx / n;
  const double my = sy / n;
  double sxx = 0.0, sxy = 0.0;
  for (const auto& [x, y] : points) {
    const double dx = std::log(x) - mx;
    sxx += dx * dx;
    sxy += dx * (std::log(y) - my);
  }
  LogLogFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double rss = 0.0;
  for (const auto& [x, y] : points) {
    const double e = std::log(y) - (fit.intercept + fit.slope * std::log(x));
    rss += e * e;
  }
  fit.residual = std::sqrt(rss / n);
  return fit;
}

LemmaCheck lemma_var_check(const DomainMask& mask, const Window& g) {
  require_same_grid(mask.grid(), g.grid(), "lemma_var_check");
  const SpectrogramField phi = ambiguity_sq(g);
  const RealField ind = mask.indicator();
  LemmaCheck c;
  c.lhs = field_l1_diff(circ_convolve(ind, phi), ind);
  c.rhs = mask.perimeter() * mstar_norm(phi, MomentNorm::kL1);
  c.pass = c.lhs <= c.rhs + 1e-9;
  return c;
}

bool InequalityReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass; });
}

InequalityReport inequality_suite(const DomainMask& mask, const Window& g) {
  require_same_grid(mask.grid(), g.grid(), "inequality_suite");
  const LocOperator op(g, mask);
  const std::size_t A = mask.empty() ? 0 : a_omega(mask);
  const EigenSystem eigs = eigh(op, A);

  InequalityReport rep;
  rep.stats = plunge_stats(eigs, mask, op);
  rep.mstar = mstar_norm(g, MomentNorm::kL1);
  if (!mask.empty()) {
    const AccumulatedSpectrogram rho = accumulated_spectrogram(eigs, g, mask);
    rep.l1_error = l1_error(rho);
    rep.l1_error_identity = l1_error_from_eigenvalues(eigs, mask);
    rep.trace_norm = trace_norm_diff(LocOperator::general(g, rho.field), op);
  }

  const PlungeStats& s = rep.stats;
  const double eps = kInequalitySlack;
  auto add = [&rep](std::string name, double lhs, double rhs, bool pass) {
    rep.checks.push_back({std::move(name), lhs, rhs, pass});
  };
  const double cap = rep.mstar * s.perimeter;
  add("0 <= deficit <= mstar*perimeter", s.deficit, cap, s.deficit >= -eps && s.deficit <= cap + eps);
  add("eigen_deficit <= deficit", s.eigen_deficit, s.deficit, s.eigen_deficit <= s.deficit + eps);
  add("l1_error <= 1 + 2*eigen_deficit", rep.l1_error, 1.0 + 2.0 * s.eigen_deficit,
      rep.l1_error <= 1.0 + 2.0 * s.eigen_deficit + eps);
  add("l1_error >= deficit", rep.l1_error, s.deficit, rep.l1_error >= s.deficit - eps);
  add("trace_norm(H_rho - H_Omega) <= l1_error", rep.trace_norm, rep.l1_error,
      rep.trace_norm <= rep.l1_error + eps);
  return rep;
}

RateRecord sweep_point(const SweepConfig& config, const Window& g, double R,
                       SpectrogramField* rho_out) {
  const auto start = std::chrono::steady_clock::now();
  const PhaseGrid& grid = g.grid();
  const DomainMask mask = disk_mask(grid, {0.0, 0.0}, R);
  require(!mask.empty(), "sweep radius " + radius_tag(R) + " gives an empty disk");
  const LocOperator op(g, mask);
  const std::size_t A = a_omega(mask);

  EigenSystem eigs = [&] {
    if (config.solver == Solver::kIterative) {
      IterativeOptions opt;
      opt.seed = config.seed;
      const std::size_t k = std::min(A + config.margin, grid.size() - opt.oversample);
      return top_eigs_iterative(op, k, opt);
    }
    return eigh(op, A);
  }();

  const AccumulatedSpectrogram rho = accumulated_spectrogram(eigs, g, mask);
  const PlungeStats stats = plunge_stats(eigs, mask, op, config.plunge_delta);

  RateRecord r;
  r.R = R;
  r.L = grid.size();
  r.area = mask.area();
  r.perimeter = mask.perimeter();
  r.a_omega = A;
  r.l1_error = l1_error(rho);
  r.l1_error_identity = l1_error_from_eigenvalues(eigs, mask);
  r.trace = stats.trace;
  r.trace_sq = stats.trace_sq;
  r.deficit = stats.deficit;
  r.eigen_deficit = stats.eigen_deficit;
  r.mid_count = stats.mid_count;
  r.spectrum_complete = stats.spectrum_complete;
  r.degenerate_cutoff = rho.degenerate_cutoff;
  if (rho_out) *rho_out = rho.field;
  r.runtime_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

RateReport run_rate_sweep(const SweepConfig& config) {
  require(!config.radii.empty(), "sweep needs at least one radius");
  std::vector<double> radii = config.radii;
  std::sort(radii.begin(), radii.end());
  require(std::adjacent_find(radii.begin(), radii.end()) == radii.end(), "duplicate radius in sweep");
  require(radii.front() > 0.0, "sweep radii must be positive");

  const PhaseGrid grid = make_grid(config.L);
  if (!(radii.back() + 2.0 * grid.delta() < 0.5 * grid.side())) {
    fail(ErrorKind::kDomainOverflow, "R=" + radius_tag(radii.back()) +
                                         " does not fit in the torus for L=" +
                                         std::to_string(config.L));
  }
  const Window g = sweep_window(grid, config.window);
  const bool write = !config.out_dir.empty();
  const io::fs::path out_dir(config.out_dir);
  if (write) io::fs::create_directories(out_dir);

  RateReport report;
  report.records.resize(radii.size());
  std::vector<std::exception_ptr> errors(radii.size());
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t i = next++; i < radii.size(); i = next++) {
      try {
        SpectrogramField rho(grid);
        report.records[i] = sweep_point(config, g, radii[i], write && config.heatmaps ? &rho : nullptr);
        if (write) {
          const PlungeStats s{report.records[i].area, report.records[i].perimeter,
                              report.records[i].a_omega, report.records[i].trace,
                              report.records[i].trace_sq, report.records[i].deficit,
                              report.records[i].eigen_deficit, 0.0, config.plunge_delta,
                              report.records[i].mid_count, report.records[i].spectrum_complete};
          io::write_text(out_dir / ("stats_R" + radius_tag(radii[i]) + ".json"),
                         io::stats_json(s, report.records[i].l1_error));
          if (config.heatmaps) io::write_field_pgm(out_dir / ("rho_R" + radius_tag(radii[i]) + ".pgm"), rho);
        }
      } catch (const Error& e) {
        errors[i] = std::make_exception_ptr(
            Error(e.kind(), "R=" + radius_tag(radii[i]) + ": " + e.what()));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(config.threads, radii.size()));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  std::vector<std::pair<double, double>> pts;
  for (const RateRecord& r : report.records) {
    if (r.l1_error > 0.0) pts.emplace_back(r.R, r.l1_error);
    else report.warnings.push_back("R=" + radius_tag(r.R) + ": nonpositive l1_error");
    if (r.degenerate_cutoff) {
      report.warnings.push_back("R=" + radius_tag(r.R) +
                                ": A_Omega cutoff inside a degenerate eigenvalue cluster");
    }
  }
  if (pts.size() >= 2) {
    report.fit = fit_loglog(pts);
  } else {
    report.warnings.push_back("fewer than two radii: no log-log fit");
  }

  report.l1_per_perimeter = {1e300, -1e300};
  report.deficit_per_radius = {1e300, -1e300};
  for (const RateRecord& r : report.records) {
    const double a = r.l1_error / r.perimeter;
    const double b = r.deficit / r.R;
    report.l1_per_perimeter = {std::min(report.l1_per_perimeter.min, a),
                               std::max(report.l1_per_perimeter.max, a)};
    report.deficit_per_radius = {std::min(report.deficit_per_radius.min, b),
                                 std::max(report.deficit_per_radius.max, b)};
    report.old_bound_ratio.push_back(r.l1_error / std::sqrt(r.perimeter * r.area));
  }
  const SpectrogramField phi = ambiguity_sq(g);
  report.mstar_l1 = mstar_norm(phi, MomentNorm::kL1);
  report.mstar_l2 = mstar_norm(phi, MomentNorm::kL2);

  if (write) {
    std::ostringstream csv;
    csv << "R,L,area,perimeter,A,l1_error,l1_error_identity,trace,trace_sq,deficit,"
           "eigen_deficit,mid_count\n";
    for (const RateRecord& r : report.records) {
      csv << io::format_double(r.R) << ',' << r.L << ',' << io::format_double(r.area) << ','
          << io::format_double(r.perimeter) << ',' << r.a_omega << ','
          << io::format_double(r.l1_error) << ',' << io::format_double(r.l1_error_identity) << ','
          << io::format_double(r.trace) << ',' << io::format_double(r.trace_sq) << ','
          << io::format_double(r.deficit) << ',' << io::format_double(r.eigen_deficit) << ','
          << r.mid_count << '\n';
    }
    io::write_text(out_dir / "sweep.csv", csv.str());

    json j;
    j["L"] = config.L;
    j["window"] = config.window;
    j["solver"] = config.solver == Solver::kDense ? "dense" : "iterative";
    j["margin"] = config.margin;
    j["seed"] = config.seed;
    j["mstar_l1"] = report.mstar_l1;
    j["mstar_l2"] = report.mstar_l2;
    json recs = json::array();
    for (const RateRecord& r : report.records) recs.push_back(record_json(r));
    j["records"] = recs;
    if (report.fit) {
      j["fit"] = {{"slope", report.fit->slope},
                  {"intercept", report.fit->intercept},
                  {"residual", report.fit->residual}};
    } else {
      j["fit"] = nullptr;
    }
    j["l1_per_perimeter"] = {{"min", report.l1_per_perimeter.min}, {"max", report.l1_per_perimeter.max}};
    j["deficit_per_radius"] = {{"min", report.deficit_per_radius.min},
                               {"max", report.deficit_per_radius.max}};
    j["old_bound_ratio"] = report.old_bound_ratio;
    j["warnings"] = report.warnings;
    io::write_text(out_dir / "rate_report.json", j.dump(2) + "\n");
  }
  return report;
}

}  // namespace tflab::bench
