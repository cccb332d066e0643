// Copyright 2026 The tflab Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include <cmath>
#include <filesystem>
#include <random>

#include "doctest.h"
#include "tflab/bench.hpp"
#include "tflab/error.hpp"
#include "tflab/io.hpp"
#include "tflab/tfa.hpp"

using namespace tflab;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("tflab_test_bench_" + name);
  fs::remove_all(p);
  return p;
}

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected tflab::Error");
  return ErrorKind::kIo;
}

}  // namespace

TEST_CASE("fit_loglog on exact power laws") {
  const bench::LogLogFit a = bench::fit_loglog({{1.0, 3.0}, {2.0, 6.0}, {4.0, 12.0}});
  CHECK(std::abs(a.slope - 1.0) < 1e-12);
  CHECK(std::abs(a.intercept - std::log(3.0)) < 1e-12);
  CHECK(a.residual < 1e-12);
  const bench::LogLogFit b = bench::fit_loglog({{1.0, 1.0}, {3.0, 9.0}, {5.0, 25.0}, {7.0, 49.0}});
  CHECK(std::abs(b.slope - 2.0) < 1e-12);
}

TEST_CASE("fit_loglog with multiplicative noise") {
  std::mt19937_64 rng(4);
  std::normal_distribution<double> noise(0.0, 0.01);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<std::pair<double, double>> pts;
    for (double x : {2.0, 2.5, 3.0, 4.0, 5.0, 6.0}) pts.emplace_back(x, 0.7 * x * (1.0 + noise(rng)));
    const bench::LogLogFit f = bench::fit_loglog(pts);
    CHECK(std::abs(f.slope - 1.0) < 0.05);
    CHECK(f.residual > 0.0);
  }
}

TEST_CASE("fit_loglog rejects degenerate input") {
  CHECK(kind_of([] { bench::fit_loglog({{1.0, 1.0}}); }) == ErrorKind::kInvalidArgument);
  CHECK(kind_of([] { bench::fit_loglog({{1.0, 1.0}, {1.0, 2.0}}); }) == ErrorKind::kInvalidArgument);
  CHECK(kind_of([] { bench::fit_loglog({{1.0, 1.0}, {2.0, 0.0}}); }) == ErrorKind::kInvalidArgument);
}

TEST_CASE("lemma_var_check examples") {
  const PhaseGrid small = make_grid(64);
  const bench::LemmaCheck empty = bench::lemma_var_check(DomainMask(small), gaussian_window(small));
  CHECK(empty.lhs == doctest::Approx(0.0));
  CHECK(empty.rhs == 0.0);
  CHECK(empty.pass);

  const PhaseGrid grid = make_grid(1024);
  const bench::LemmaCheck disk =
      bench::lemma_var_check(disk_mask(grid, {0.0, 0.0}, 2.0), gaussian_window(grid));
  CHECK(disk.pass);
  CHECK(disk.lhs > 0.0);
  CHECK(disk.lhs < disk.rhs);

  const PhaseGrid mid = make_grid(256);
  const bench::LemmaCheck square =
      bench::lemma_var_check(rectangle_mask(mid, -20, -20, 40, 40), boxcar_window(mid));
  CHECK(square.pass);
}

TEST_CASE("inequality_suite examples") {
  const PhaseGrid small = make_grid(64);
  const bench::InequalityReport full = bench::inequality_suite(full_mask(small), gaussian_window(small));
  REQUIRE(full.checks.size() == 5u);
  CHECK(full.all_pass());
  CHECK(std::abs(full.l1_error) < 1e-7);
  CHECK(std::abs(full.stats.deficit) < 1e-8);
  CHECK(full.trace_norm < 1e-7);

  const PhaseGrid grid = make_grid(256);
  const bench::InequalityReport disk =
      bench::inequality_suite(disk_mask(grid, {0.0, 0.0}, 2.0), gaussian_window(grid));
  CHECK(disk.all_pass());
  CHECK(std::abs(disk.l1_error - disk.l1_error_identity) < 1e-8);

  const PhaseGrid g128 = make_grid(128);
  std::mt19937_64 rng(2);
  const bench::InequalityReport blobs = bench::inequality_suite(blob_mask(g128, 10, rng), hann_window(g128));
  for (const auto& c : blobs.checks) {
    INFO(c.name << ": " << c.lhs << " vs " << c.rhs);
    CHECK(c.pass);
  }
}

TEST_CASE("regression corpus shape") {
  const PhaseGrid grid = make_grid(128);
  const auto corpus = bench::regression_corpus(grid);
  REQUIRE(corpus.size() == 14u);
  CHECK(corpus[0].name == "disk");
  CHECK(corpus[3].name == "lshape");
  for (const auto& m : corpus) CHECK(!m.mask.empty());
  // seeded
  const auto again = bench::regression_corpus(grid);
  for (std::size_t i = 0; i < corpus.size(); ++i)
    CHECK(std::equal(corpus[i].mask.cells().begin(), corpus[i].mask.cells().end(),
                     again[i].mask.cells().begin()));
  CHECK(bench::corpus_windows(grid).size() == 3u);
  CHECK_THROWS_AS(bench::regression_corpus(make_grid(36)), Error);
}

TEST_CASE("single radius sweep warns and skips the fit") {
  bench::SweepConfig c;
  c.L = 256;
  c.radii = {1.5};
  const bench::RateReport r = bench::run_rate_sweep(c);
  REQUIRE(r.records.size() == 1u);
  CHECK(!r.fit.has_value());
  CHECK(!r.warnings.empty());
  CHECK(r.records[0].l1_error > 0.0);
  CHECK(std::abs(r.records[0].l1_error - r.records[0].l1_error_identity) < 1e-8);
}

TEST_CASE("sweep guards the torus") {
  bench::SweepConfig c;
  c.L = 256;
  c.radii = {2.0, 7.9};
  CHECK(kind_of([&] { bench::run_rate_sweep(c); }) == ErrorKind::kDomainOverflow);
  c.radii = {2.0, 2.0};
  CHECK(kind_of([&] { bench::run_rate_sweep(c); }) == ErrorKind::kInvalidArgument);
}

TEST_CASE("sweep output is byte-stable and ordered by R") {
  bench::SweepConfig c;
  c.L = 256;
  c.radii = {2.0, 1.0, 1.5};
  c.threads = 3;
  const fs::path dir_a = scratch("a");
  c.out_dir = dir_a.string();
  const bench::RateReport first = bench::run_rate_sweep(c);
  c.threads = 1;
  c.out_dir = scratch("b").string();
  bench::run_rate_sweep(c);

  CHECK(first.records[0].R == 1.0);
  CHECK(first.records[2].R == 2.0);
  CHECK(first.fit.has_value());
  const std::string a = io::read_text(dir_a / "sweep.csv");
  const std::string b = io::read_text(fs::path(c.out_dir) / "sweep.csv");
  CHECK(a == b);
  CHECK(a.rfind("R,L,area,perimeter,A,l1_error", 0) == 0);
  CHECK(fs::exists(fs::path(c.out_dir) / "rate_report.json"));
  CHECK(fs::exists(fs::path(c.out_dir) / "stats_R1.5.json"));
  CHECK(fs::exists(fs::path(c.out_dir) / "rho_R2.pgm"));
}

TEST_CASE("iterative sweep agrees with the dense sweep") {
  bench::SweepConfig c;
  c.L = 256;
  c.radii = {1.0, 2.0};
  const bench::RateReport dense = bench::run_rate_sweep(c);
  c.solver = bench::Solver::kIterative;
  c.margin = 16;
  const bench::RateReport it = bench::run_rate_sweep(c);
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(std::abs(dense.records[i].l1_error - it.records[i].l1_error) < 1e-6);
    CHECK(dense.records[i].trace_sq == it.records[i].trace_sq);
    CHECK(!it.records[i].spectrum_complete);
  }
}

TEST_CASE("slope is stable across resolutions") {
  bench::SweepConfig c;
  c.radii = {2.0, 3.0, 4.0};
  c.heatmaps = false;
  c.L = 1024;
  const double coarse = bench::run_rate_sweep(c).fit->slope;
  c.L = 4096;
  const double fine = bench::run_rate_sweep(c).fit->slope;
  INFO("slope L=1024 " << coarse << ", L=4096 " << fine);
  CHECK(std::abs(coarse - fine) < 0.15);
}
