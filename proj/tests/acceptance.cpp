// Copyright 2026 The tflab Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

// Acceptance run. Prints one PASS/FAIL line per criterion and exits nonzero
// if any criterion fails. Tolerances are pinned here and nowhere else.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "tflab/accspec.hpp"
#include "tflab/bench.hpp"
#include "tflab/error.hpp"
#include "tflab/locop.hpp"
#include "tflab/oracle.hpp"
#include "tflab/tfa.hpp"
#include "tflab/version.hpp"

using namespace tflab;

namespace {

constexpr double kTraceRel = 1e-9;
constexpr double kFrobeniusRel = 1e-8;
constexpr double kIdentityAbs = 1e-8;
constexpr double kOracleDeviation = 2e-2;
constexpr double kSlopeLo = 0.75, kSlopeHi = 1.25;
constexpr double kBandRatio = 3.0;
constexpr double kOldBoundDropLo = 1.4, kOldBoundDropHi = 2.1;
constexpr double kDeficitLo = 1.5, kDeficitHi = 2.7;
constexpr double kAnalyticLo = 1.7, kAnalyticHi = 2.3;
constexpr double kAnalyticIdentity = 1e-6;

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void run(int id, const char* title, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("[%s] criterion %d: %s | %s | %.1fs\n", o.pass ? "PASS" : "FAIL", id, title,
              o.detail.c_str(), secs);
  std::fflush(stdout);
  failures += !o.pass;
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

Outcome trace_identities() {
  const PhaseGrid grid = make_grid(128);
  const auto windows = bench::corpus_windows(grid);
  std::mt19937_64 rng(0);
  double worst_tr = 0.0, worst_fr = 0.0;
  for (int i = 0; i < 50; ++i) {
    const DomainMask m = random_mask(grid, rng);
    for (const Window& g : windows) {
      const LocOperator op(g, m);
      const Eigen::MatrixXcd H = assemble(op);
      const double tr = H.trace().real();
      worst_tr = std::max(worst_tr, std::abs(tr - m.area()) / m.area());
      const double f2 = frobenius_sq(H);
      worst_fr = std::max(worst_fr, std::abs(f2 - trace_square_ambiguity(op)) / f2);
    }
  }
  return {worst_tr <= kTraceRel && worst_fr <= kFrobeniusRel,
          fmt("150 pairs, max rel trace err %.2e (<= %.0e), max rel frobenius err %.2e (<= %.0e)",
              worst_tr, kTraceRel, worst_fr, kFrobeniusRel)};
}

Outcome error_identity() {
  const PhaseGrid grid = make_grid(256);
  double worst = 0.0;
  int pairs = 0;
  for (const Window& g : bench::corpus_windows(grid)) {
    for (const auto& [name, m] : bench::regression_corpus(grid)) {
      const EigenSystem e = eigh(LocOperator(g, m), a_omega(m));
      const double lhs = l1_error(accumulated_spectrogram(e, g, m));
      worst = std::max(worst, std::abs(lhs - l1_error_from_eigenvalues(e, m)));
      ++pairs;
    }
  }
  return {worst <= kIdentityAbs, fmt("%d pairs at L=256, max |l1 - identity| %.2e (<= %.0e)", pairs,
                                     worst, kIdentityAbs)};
}

Outcome inequality_suite() {
  const PhaseGrid grid = make_grid(128);
  int pairs = 0, violated = 0;
  std::string first;
  for (const Window& g : bench::corpus_windows(grid)) {
    for (const auto& [name, m] : bench::regression_corpus(grid)) {
      const auto rep = bench::inequality_suite(m, g);
      ++pairs;
      for (const auto& c : rep.checks) {
        if (c.pass) continue;
        ++violated;
        if (first.empty()) first = "; first: " + name + "/" + g.name() + " " + c.name;
      }
    }
  }
  return {violated == 0, fmt("%d pairs x 5 inequalities at L=128, slack %.0e, %d violated", pairs,
                             bench::kInequalitySlack, violated) + first};
}

Outcome oracle_agreement() {
  std::string detail;
  bool pass = true;
  for (double R : {1.0, 1.5, 2.0}) {
    double dev[2] = {0.0, 0.0};
    int i = 0;
    for (std::size_t L : {256u, 1024u}) {
      const PhaseGrid grid = make_grid(L);
      const EigenSystem e = eigh(LocOperator(gaussian_window(grid), disk_mask(grid, {0.0, 0.0}, R)), 0);
      for (std::size_t k = 0; k < std::min<std::size_t>(L, 200); ++k)
        dev[i] = std::max(dev[i], std::abs(e.eigenvalues[k] - oracle::disk_eigenvalue(static_cast<int>(k), R)));
      ++i;
    }
    pass = pass && dev[1] <= kOracleDeviation && dev[1] < dev[0];
    detail += fmt("R=%g dev256 %.2e dev1024 %.2e; ", R, dev[0], dev[1]);
  }
  return {pass, detail + fmt("bound %.0e, decreasing", kOracleDeviation)};
}

// Criteria 5 and 6 share one sweep.
bench::RateReport& default_sweep() {
  static bench::RateReport report = [] {
    bench::SweepConfig c;
    c.solver = bench::Solver::kIterative;
    c.heatmaps = false;
    return bench::run_rate_sweep(c);
  }();
  return report;
}

Outcome sharp_rate() {
  const bench::RateReport& r = default_sweep();
  if (!r.fit) return {false, "no fit"};
  const double slope = r.fit->slope;
  const double band = r.l1_per_perimeter.max / r.l1_per_perimeter.min;
  bool monotone = true;
  for (std::size_t i = 1; i < r.old_bound_ratio.size(); ++i)
    monotone = monotone && r.old_bound_ratio[i] < r.old_bound_ratio[i - 1];
  const double drop = r.old_bound_ratio.front() / r.old_bound_ratio.back();
  return {slope >= kSlopeLo && slope <= kSlopeHi && band <= kBandRatio && monotone &&
              drop >= kOldBoundDropLo && drop <= kOldBoundDropHi,
          fmt("L=4096 iterative, slope %.4f in [%.2f, %.2f] (rms %.3f), l1/perimeter band %.3f (<= %.0f), "
              "old-bound ratio monotone=%s, R=2->6 drop %.3f in [%.1f, %.1f]",
              slope, kSlopeLo, kSlopeHi, r.fit->residual, band, kBandRatio, monotone ? "yes" : "no", drop,
              kOldBoundDropLo, kOldBoundDropHi)};
}

Outcome plunge_growth() {
  const bench::RateReport& r = default_sweep();
  double d2 = 0.0, d4 = 0.0;
  for (const auto& rec : r.records) {
    if (rec.R == 2.0) d2 = rec.deficit;
    if (rec.R == 4.0) d4 = rec.deficit;
  }
  const double ratio = d4 / d2;
  return {ratio >= kDeficitLo && ratio <= kDeficitHi,
          fmt("L=4096, deficit(2) %.6f deficit(4) %.6f ratio %.4f in [%.1f, %.1f]", d2, d4, ratio, kDeficitLo,
              kDeficitHi)};
}

Outcome lemma() {
  int pairs = 0, failed = 0;
  double tightest = 0.0;
  for (std::size_t L : {128u, 256u}) {
    const PhaseGrid grid = make_grid(L);
    for (const Window& g : bench::corpus_windows(grid)) {
      for (const auto& [name, m] : bench::regression_corpus(grid)) {
        const auto c = bench::lemma_var_check(m, g);
        ++pairs;
        failed += !c.pass;
        tightest = std::max(tightest, c.lhs / c.rhs);
      }
    }
  }
  return {failed == 0, fmt("%d pairs at L=128,256, %d failed, max lhs/rhs %.4f", pairs, failed, tightest)};
}

Outcome analytic_rate() {
  const double e4 = oracle::analytic_l1_error(4.0);
  const double e8 = oracle::analytic_l1_error(8.0);
  double worst = 0.0;
  for (double R : {0.5, 1.0, 2.0, 4.0, 8.0, 16.0})
    worst = std::max(worst, std::abs(oracle::analytic_l1_error(R) - oracle::analytic_l1_error_from_eigenvalues(R)));
  const double ratio = e8 / e4;
  return {ratio >= kAnalyticLo && ratio <= kAnalyticHi && worst <= kAnalyticIdentity,
          fmt("ratio %.4f in [%.1f, %.1f], max |quadrature - identity| %.2e (<= %.0e)", ratio, kAnalyticLo,
              kAnalyticHi, worst, kAnalyticIdentity)};
}

}  // namespace

int main() {
  std::printf("tflab acceptance, build %s\n", std::string(build_id()).c_str());
  run(1, "exact trace identities", trace_identities);
  run(2, "exact error decomposition", error_identity);
  run(3, "inequality suite", inequality_suite);
  run(4, "gaussian disk oracle agreement", oracle_agreement);
  run(5, "sharp rate", sharp_rate);
  run(6, "plunge lower bound", plunge_growth);
  run(7, "convolution lemma", lemma);
  run(8, "analytic rate", analytic_rate);
  std::printf("%d of 8 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
