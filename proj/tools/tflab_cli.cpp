// Copyright 2026 The tflab Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

// Command line front end.
//
// Exit codes: 0 success, 2 usage / config / io error, 3 numeric failure or
// domain overflow, 4 a checked inequality was violated.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tflab/accspec.hpp"
#include "tflab/bench.hpp"
#include "tflab/error.hpp"
#include "tflab/io.hpp"
#include "tflab/locop.hpp"
#include "tflab/oracle.hpp"
#include "tflab/tfa.hpp"
#include "tflab/version.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace tflab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;
constexpr int kExitCheck = 4;

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::kNumericFailure:
    case ErrorKind::kDomainOverflow:
      return kExitNumeric;
    default:
      return kExitUsage;
  }
}

struct Common {
  std::size_t L = 0;
  std::string window = "gaussian";
  std::string out = ".";
  std::uint64_t seed = 0;
};

// Records what a run consumed and produced; written as manifest.json.
class Manifest {
 public:
  Manifest(std::string command, int argc, char** argv) : start_(std::chrono::steady_clock::now()) {
    j_["command"] = std::move(command);
    j_["argv"] = std::vector<std::string>(argv, argv + argc);
    j_["build"] = std::string(build_id());
    j_["inputs"] = json::object();
    j_["outputs"] = json::array();
  }
  json& inputs() { return j_["inputs"]; }
  void output(const fs::path& p) { j_["outputs"].push_back(p.filename().string()); }
  void set(const std::string& key, json v) { j_[key] = std::move(v); }
  void write(const fs::path& dir) {
    j_["wall_time_s"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    io::write_text(dir / "manifest.json", j_.dump(2) + "\n");
  }

 private:
  json j_;
  std::chrono::steady_clock::time_point start_;
};

Window parse_window(const PhaseGrid& grid, const std::string& spec) {
  if (spec.rfind("file:", 0) == 0) return io::read_window_file(spec.substr(5), grid);
  return window_from_spec(grid, spec);
}

long parse_long(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const long v = std::stol(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  fail(ErrorKind::kInvalidArgument, "bad " + what + " '" + text + "'");
}

// hermite:k, impulse[:t], file:path, random
Signal parse_signal(const PhaseGrid& grid, const std::string& spec, std::uint64_t seed) {
  const std::size_t colon = spec.find(':');
  const std::string kind = spec.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (kind == "hermite") {
    const long k = parse_long(arg, "hermite index");
    require(k >= 0, "hermite index must be nonnegative");
    return hermite_signal(grid, static_cast<int>(k));
  }
  if (kind == "impulse") return impulse(grid, arg.empty() ? 0 : grid.wrap(parse_long(arg, "impulse position")));
  if (kind == "file") return io::read_signal_csv(arg, grid);
  if (kind == "random" && arg.empty()) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal;
    Signal s(grid);
    for (auto& v : s.values) v = cplx(normal(rng), normal(rng));
    const double n = s.norm();
    for (auto& v : s.values) v /= n;
    return s;
  }
  fail(ErrorKind::kInvalidArgument, "unknown signal '" + spec + "'");
}

// A file path, or one of the shorthands disk:R, full.
DomainMask parse_mask(const PhaseGrid& grid, const std::string& spec) {
  if (spec.rfind("disk:", 0) == 0) {
    char* end = nullptr;
    const double R = std::strtod(spec.c_str() + 5, &end);
    require(*end == '\0' && spec.size() > 5, "bad disk radius in '" + spec + "'");
    return disk_mask(grid, {0.0, 0.0}, R);
  }
  if (spec == "full") return full_mask(grid);
  return io::load_mask(spec, grid);
}

void add_common(CLI::App* cmd, Common& c, bool needs_window = true) {
  cmd->add_option("--L", c.L, "signal length; the phase grid is L x L")->required();
  if (needs_window) cmd->add_option("--window", c.window, "gaussian | hann[:w] | boxcar[:w] | file:path");
  cmd->add_option("--out", c.out, "output directory");
  cmd->add_option("--seed", c.seed, "seed for every random choice");
}

fs::path prepare(const std::string& out) {
  const fs::path dir(out);
  fs::create_directories(dir);
  return dir;
}

json stats_object(const PlungeStats& s, double l1) { return json::parse(io::stats_json(s, l1)); }

int cmd_spectrogram(const Common& c, const std::string& signal, Manifest& m) {
  const PhaseGrid grid = make_grid(c.L);
  const Window g = parse_window(grid, c.window);
  const Signal f = parse_signal(grid, signal, c.seed);
  const SpectrogramField s = spectrogram(f, g);
  const fs::path dir = prepare(c.out);
  m.inputs() = {{"L", c.L}, {"window", c.window}, {"signal", signal}, {"seed", c.seed}};
  io::write_field_csv(dir / "spectrogram.csv", s);
  io::write_field_pgm(dir / "spectrogram.pgm", s);
  m.output(dir / "spectrogram.csv");
  m.output(dir / "spectrogram.pgm");
  m.write(dir);
  return kExitOk;
}

struct EigsOptions {
  std::string mask;
  std::string solver = "dense";
  std::size_t k = 0;
  bool vectors = false;
};

EigenSystem solve(const LocOperator& op, const DomainMask& mask, const EigsOptions& o, std::uint64_t seed) {
  const std::size_t A = mask.empty() ? 0 : a_omega(mask);
  if (o.solver == "iterative") {
    IterativeOptions opt;
    opt.seed = seed;
    const std::size_t k = o.k ? o.k : std::min(A + 64, op.grid().size() - opt.oversample);
    return top_eigs_iterative(op, k, opt);
  }
  require(o.solver == "dense", "unknown solver '" + o.solver + "'");
  return eigh(op, o.vectors ? kAllVectors : std::max(A, o.k));
}

int cmd_eigs(const Common& c, const EigsOptions& o, Manifest& m) {
  const PhaseGrid grid = make_grid(c.L);
  const Window g = parse_window(grid, c.window);
  const DomainMask mask = parse_mask(grid, o.mask);
  const LocOperator op(g, mask);
  const EigenSystem e = solve(op, mask, o, c.seed);

  const fs::path dir = prepare(c.out);
  m.inputs() = {{"L", c.L}, {"window", c.window}, {"mask", o.mask}, {"solver", o.solver},
                {"k", o.k}, {"seed", c.seed}};
  if (o.solver == "dense" && o.k && o.k < e.count()) {
    // stats below still use the whole spectrum
    EigenSystem head(grid);
    head.eigenvalues.assign(e.eigenvalues.begin(), e.eigenvalues.begin() + static_cast<long>(o.k));
    io::write_eigenvalues_csv(dir / "eigenvalues.csv", head);
  } else {
    io::write_eigenvalues_csv(dir / "eigenvalues.csv", e);
  }
  m.output(dir / "eigenvalues.csv");
  if (!mask.empty()) {
    const std::size_t A = a_omega(mask);
    double l1 = std::nan("");
    if (e.count() >= A) l1 = l1_error_from_eigenvalues(e, mask);
    PlungeStats s = plunge_stats(e, mask, op);
    io::write_text(dir / "stats.json", io::stats_json(s, l1));
    m.output(dir / "stats.json");
  }
  if (o.vectors) {
    io::write_eigenvectors(dir / "eigenvectors", e);
    m.output(dir / "eigenvectors.bin");
    m.output(dir / "eigenvectors.json");
  }
  m.write(dir);
  return kExitOk;
}

int cmd_accspec(const Common& c, const EigsOptions& o, Manifest& m) {
  const PhaseGrid grid = make_grid(c.L);
  const Window g = parse_window(grid, c.window);
  const DomainMask mask = parse_mask(grid, o.mask);
  require(!mask.empty(), "the accumulated spectrogram needs a nonempty mask");
  const LocOperator op(g, mask);
  const EigenSystem e = solve(op, mask, o, c.seed);
  const AccumulatedSpectrogram rho = accumulated_spectrogram(e, g, mask);
  const PlungeStats s = plunge_stats(e, mask, op);
  const double l1 = l1_error(rho);

  const fs::path dir = prepare(c.out);
  m.inputs() = {{"L", c.L}, {"window", c.window}, {"mask", o.mask}, {"solver", o.solver}, {"seed", c.seed}};
  io::write_field_csv(dir / "rho.csv", rho.field);
  io::write_field_pgm(dir / "rho.pgm", rho.field);
  io::write_eigenvalues_csv(dir / "eigenvalues.csv", e);
  json stats = stats_object(s, l1);
  stats["l1_error_identity"] = l1_error_from_eigenvalues(e, mask);
  stats["degenerate_cutoff"] = rho.degenerate_cutoff;
  io::write_text(dir / "stats.json", stats.dump(2) + "\n");
  for (const char* f : {"rho.csv", "rho.pgm", "eigenvalues.csv", "stats.json"}) m.output(dir / f);
  if (rho.degenerate_cutoff) std::cerr << "warning: A_Omega cutoff splits a degenerate eigenvalue cluster\n";
  m.write(dir);
  return kExitOk;
}

std::string window_from_json(const json& w) {
  if (w.is_string()) return w.get<std::string>();
  const std::string type = w.at("type").get<std::string>();
  if (type == "gaussian") return type;
  if (type == "file") return "file:" + w.at("path").get<std::string>();
  const json& p = w.value("params", json::object());
  if (p.contains("width")) return type + ":" + io::format_double(p["width"].get<double>());
  return type;
}

bench::SweepConfig sweep_config(const fs::path& path) {
  json j;
  try {
    j = json::parse(io::read_text(path));
  } catch (const json::exception& e) {
    fail(ErrorKind::kInvalidArgument, "config is not valid JSON: " + std::string(e.what()));
  }
  bench::SweepConfig c;
  try {
    if (j.contains("radii")) c.radii = j["radii"].get<std::vector<double>>();
    if (j.contains("L")) c.L = j["L"].get<std::size_t>();
    if (j.contains("window")) c.window = window_from_json(j["window"]);
    if (j.contains("solver")) {
      const json& s = j["solver"];
      const std::string type = s.is_string() ? s.get<std::string>() : s.at("type").get<std::string>();
      require(type == "dense" || type == "iterative", "solver must be dense or iterative");
      c.solver = type == "dense" ? bench::Solver::kDense : bench::Solver::kIterative;
      if (s.is_object() && s.contains("margin")) c.margin = s["margin"].get<std::size_t>();
    }
    if (j.contains("out_dir")) c.out_dir = j["out_dir"].get<std::string>();
    if (j.contains("seed")) c.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("threads")) c.threads = j["threads"].get<unsigned>();
    if (j.contains("heatmaps")) c.heatmaps = j["heatmaps"].get<bool>();
    if (j.contains("plunge_delta")) c.plunge_delta = j["plunge_delta"].get<double>();
  } catch (const json::exception& e) {
    fail(ErrorKind::kInvalidArgument, "bad sweep config: " + std::string(e.what()));
  }
  return c;
}

int cmd_sweep(const std::string& config, const std::string& out, Manifest& m) {
  bench::SweepConfig c = sweep_config(config);
  if (!out.empty()) c.out_dir = out;
  if (c.out_dir.empty()) c.out_dir = ".";
  const bench::RateReport r = bench::run_rate_sweep(c);
  m.inputs() = json::parse(io::read_text(config));
  for (const char* f : {"sweep.csv", "rate_report.json"}) m.output(fs::path(c.out_dir) / f);
  if (r.fit) {
    std::printf("slope %.6f intercept %.6f rms %.6f\n", r.fit->slope, r.fit->intercept, r.fit->residual);
  }
  for (const auto& w : r.warnings) std::cerr << "warning: " << w << '\n';
  m.write(c.out_dir);
  return kExitOk;
}

int cmd_oracle(double R, int kmax, const std::string& out, Manifest& m) {
  require(R > 0.0, "--R must be positive");
  const int A = static_cast<int>(std::ceil(std::numbers::pi * R * R));
  const int n = kmax > 0 ? kmax : 2 * A + 20;
  const oracle::GaussianDiskModel model = oracle::gaussian_disk_model(R, n);
  const fs::path dir = prepare(out);

  std::string eig = "k,lambda\n";
  for (int k = 0; k < n; ++k) eig += std::to_string(k) + "," + io::format_double(model.eigenvalues[k]) + "\n";
  io::write_text(dir / "oracle_eigenvalues.csv", eig);

  std::string prof = "r,rho\n";
  const double r_max = R + 4.0;
  const int steps = 400;
  for (int i = 0; i <= steps; ++i) {
    const double r = r_max * i / steps;
    prof += io::format_double(r) + "," + io::format_double(oracle::analytic_accumulated(R, r)) + "\n";
  }
  io::write_text(dir / "oracle_profile.csv", prof);

  json summary = {{"R", R}, {"A", A}, {"l1_error_identity", oracle::analytic_l1_error_from_eigenvalues(R)}};
  if (R >= 0.5 && R <= 20.0) summary["l1_error_quadrature"] = oracle::analytic_l1_error(R);
  io::write_text(dir / "oracle.json", summary.dump(2) + "\n");

  m.inputs() = {{"R", R}, {"kmax", n}};
  for (const char* f : {"oracle_eigenvalues.csv", "oracle_profile.csv", "oracle.json"}) m.output(dir / f);
  m.write(dir);
  return kExitOk;
}

int cmd_check(const std::string& config, const std::string& out, Manifest& m) {
  std::size_t L = 128;
  std::uint64_t seed = 0;
  int blobs = 10;
  std::vector<std::string> windows{"gaussian", "hann:2", "boxcar:1"};
  if (!config.empty()) {
    try {
      const json j = json::parse(io::read_text(config));
      L = j.value("L", L);
      seed = j.value("seed", seed);
      blobs = j.value("blob_masks", blobs);
      if (j.contains("windows")) {
        windows.clear();
        for (const json& w : j["windows"]) windows.push_back(window_from_json(w));
      }
    } catch (const json::exception& e) {
      fail(ErrorKind::kInvalidArgument, "bad check config: " + std::string(e.what()));
    }
  }
  const PhaseGrid grid = make_grid(L);
  const auto corpus = bench::regression_corpus(grid, seed, blobs);

  json results = json::array();
  int violations = 0;
  for (const std::string& ws : windows) {
    const Window g = parse_window(grid, ws);
    for (const auto& [name, mask] : corpus) {
      const bench::InequalityReport rep = bench::inequality_suite(mask, g);
      const bench::LemmaCheck lemma = bench::lemma_var_check(mask, g);
      json entry = {{"mask", name}, {"window", ws}, {"l1_error", rep.l1_error},
                    {"l1_error_identity", rep.l1_error_identity}, {"mstar", rep.mstar},
                    {"trace_norm", rep.trace_norm}};
      json checks = json::array();
      for (const auto& c : rep.checks) {
        checks.push_back({{"name", c.name}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"pass", c.pass}});
        if (!c.pass) {
          ++violations;
          std::printf("VIOLATED %s/%s: %s (%.17g vs %.17g)\n", name.c_str(), ws.c_str(), c.name.c_str(), c.lhs,
                      c.rhs);
        }
      }
      checks.push_back({{"name", "convolution lemma"}, {"lhs", lemma.lhs}, {"rhs", lemma.rhs}, {"pass", lemma.pass}});
      if (!lemma.pass) {
        ++violations;
        std::printf("VIOLATED %s/%s: convolution lemma (%.17g vs %.17g)\n", name.c_str(), ws.c_str(), lemma.lhs,
                    lemma.rhs);
      }
      entry["checks"] = checks;
      results.push_back(entry);
    }
  }
  std::printf("%zu pairs checked, %d violations\n", results.size(), violations);

  m.inputs() = {{"L", L}, {"seed", seed}, {"blob_masks", blobs}, {"windows", windows}};
  m.set("violations", violations);
  if (!out.empty()) {
    const fs::path dir = prepare(out);
    io::write_text(dir / "check_report.json", results.dump(2) + "\n");
    m.output(dir / "check_report.json");
    m.write(dir);
  }
  return violations == 0 ? kExitOk : kExitCheck;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Time-frequency localization toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(build_id()));

  Common common;
  std::string signal = "hermite:0";
  auto* spec = app.add_subcommand("spectrogram", "spectrogram of a signal as CSV and PGM");
  add_common(spec, common);
  spec->add_option("--signal", signal, "hermite:k | impulse[:t] | file:path | random");

  EigsOptions eo;
  auto* eigs = app.add_subcommand("eigs", "eigenvalues of a localization operator");
  add_common(eigs, common);
  eigs->add_option("--mask", eo.mask, "mask file (PBM or JSON), disk:R or full")->required();
  eigs->add_option("--solver", eo.solver, "dense | iterative")->check(CLI::IsMember({"dense", "iterative"}));
  eigs->add_option("--k", eo.k, "number of leading eigenpairs");
  eigs->add_flag("--vectors", eo.vectors, "also export all eigenvectors");

  auto* acc = app.add_subcommand("accspec", "accumulated spectrogram and its statistics");
  add_common(acc, common);
  acc->add_option("--mask", eo.mask, "mask file (PBM or JSON), disk:R or full")->required();
  acc->add_option("--solver", eo.solver, "dense | iterative")->check(CLI::IsMember({"dense", "iterative"}));

  std::string config, out;
  auto* sweep = app.add_subcommand("sweep", "radius sweep with rate fit");
  sweep->add_option("--config", config, "sweep config JSON")->required()->check(CLI::ExistingFile);
  sweep->add_option("--out", out, "output directory (overrides out_dir)");

  double R = 0.0;
  int kmax = 0;
  auto* orc = app.add_subcommand("oracle", "closed-form Gaussian disk reference");
  orc->add_option("--R", R, "disk radius")->required();
  orc->add_option("--kmax", kmax, "number of eigenvalues (default 2 ceil(pi R^2) + 20)");
  orc->add_option("--out", out, "output directory")->required();

  auto* chk = app.add_subcommand("check", "inequality suite over the regression corpus");
  chk->add_option("--config", config, "check config JSON")->check(CLI::ExistingFile);
  chk->add_option("--out", out, "output directory for the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  CLI::App* sub = app.get_subcommands().front();
  Manifest manifest(sub->get_name(), argc, argv);
  try {
    if (sub == spec) return cmd_spectrogram(common, signal, manifest);
    if (sub == eigs) return cmd_eigs(common, eo, manifest);
    if (sub == acc) return cmd_accspec(common, eo, manifest);
    if (sub == sweep) return cmd_sweep(config, out, manifest);
    if (sub == orc) return cmd_oracle(R, kmax, out, manifest);
    if (sub == chk) return cmd_check(config, out, manifest);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
