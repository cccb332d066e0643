// Copyright 2026 The tflab Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <random>

#include "doctest.h"
#include "json.hpp"
#include "tflab/error.hpp"
#include "tflab/io.hpp"

using namespace tflab;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "tflab_test_io";
  fs::create_directories(dir);
  return dir / name;
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

TEST_CASE("format_double round-trips") {
  for (double v : {0.0, 1.0, -2.5, 0.1, 1.0 / 3.0, 6.02214076e23, 5e-324}) {
    CHECK(std::strtod(io::format_double(v).c_str(), nullptr) == v);
  }
  CHECK(io::format_double(0.5) == "0.5");
}

TEST_CASE("field CSV round trip in display layout") {
  const PhaseGrid grid = make_grid(16);
  RealField f(grid);
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (double& v : f.values()) v = u(rng);
  f(0, 0) = 42.0;

  const fs::path p = scratch("field.csv");
  io::write_field_csv(p, f);
  const std::string text = io::read_text(p);
  CHECK(text.rfind("L,delta\n16,0.25\n", 0) == 0);

  // origin sits at display row 8, column 8
  std::istringstream in(text);
  std::string line;
  for (int i = 0; i < 2 + 8; ++i) std::getline(in, line);
  std::getline(in, line);
  std::istringstream row(line);
  std::string cell;
  for (int j = 0; j <= 8; ++j) std::getline(row, cell, ',');
  CHECK(std::stod(cell) == 42.0);

  const RealField back = io::read_field_csv(p);
  CHECK(back.grid() == grid);
  for (std::size_t i = 0; i < grid.cells(); ++i) CHECK(back.values()[i] == f.values()[i]);
}

TEST_CASE("PGM with scaling sidecar") {
  const PhaseGrid grid = make_grid(16);
  RealField f(grid, 0.25);
  f(0, 0) = 1.0;
  const fs::path p = scratch("field.pgm");
  io::write_field_pgm(p, f);
  std::ifstream in(p, std::ios::binary);
  std::string magic;
  int w = 0, h = 0, maxval = 0;
  in >> magic >> w >> h >> maxval;
  in.get();
  CHECK(magic == "P5");
  CHECK(w == 16);
  CHECK(h == 16);
  CHECK(maxval == 65535);
  std::vector<unsigned char> px(16 * 16 * 2);
  in.read(reinterpret_cast<char*>(px.data()), static_cast<std::streamsize>(px.size()));
  CHECK(in.gcount() == static_cast<std::streamsize>(px.size()));
  // brightest pixel is the origin at (8, 8), big-endian
  const std::size_t at = (8 * 16 + 8) * 2;
  CHECK(px[at] == 0xff);
  CHECK(px[at + 1] == 0xff);
  CHECK(px[0] == 0);

  const auto side = nlohmann::json::parse(io::read_text(fs::path(p.string() + ".json")));
  CHECK(side["min"].get<double>() == 0.25);
  CHECK(side["max"].get<double>() == 1.0);
  CHECK(side["L"].get<int>() == 16);
}

TEST_CASE("PBM round trip") {
  const PhaseGrid grid = make_grid(25);
  std::mt19937_64 rng(2);
  const DomainMask m = random_mask(grid, rng);
  for (bool binary : {true, false}) {
    const fs::path p = scratch(binary ? "mask4.pbm" : "mask1.pbm");
    io::write_mask_pbm(p, m, binary);
    const DomainMask back = io::load_mask(p, grid);
    CHECK(std::equal(m.cells().begin(), m.cells().end(), back.cells().begin(), back.cells().end()));
  }
  CHECK(kind_of([&] { io::read_mask_pbm(scratch("mask4.pbm"), make_grid(16)); }) ==
        ErrorKind::kInvalidArgument);
}

TEST_CASE("mask descriptors") {
  const PhaseGrid grid = make_grid(256);
  const DomainMask d = io::mask_from_json(R"({"shape":"disk","R":2})", grid);
  const DomainMask ref = disk_mask(grid, {0.0, 0.0}, 2.0);
  CHECK(d.count() == ref.count());
  CHECK(io::mask_from_json(R"({"shape":"rectangle","rows":4,"cols":6,"origin":[1,2]})", grid).count() == 24u);
  CHECK(io::mask_from_json(R"({"shape":"lshape","arm":10,"cut":4})", grid).count() == 84u);
  CHECK(io::mask_from_json(R"({"shape":"full"})", grid).full());
  const DomainMask b1 = io::mask_from_json(R"({"shape":"blobs","count":5,"seed":3})", grid);
  const DomainMask b2 = io::mask_from_json(R"({"shape":"blobs","count":5,"seed":3})", grid);
  CHECK(std::equal(b1.cells().begin(), b1.cells().end(), b2.cells().begin()));

  CHECK(kind_of([&] { io::mask_from_json(R"({"shape":"star"})", grid); }) == ErrorKind::kInvalidArgument);
  CHECK(kind_of([&] { io::mask_from_json(R"({"shape":"disk"})", grid); }) == ErrorKind::kInvalidArgument);
  CHECK(kind_of([&] { io::mask_from_json("{", grid); }) == ErrorKind::kInvalidArgument);
  CHECK(kind_of([&] { io::mask_from_json(R"({"shape":"disk","R":9})", grid); }) ==
        ErrorKind::kDomainOverflow);
  CHECK(kind_of([&] { io::load_mask(scratch("missing.json"), grid); }) == ErrorKind::kIo);
}

TEST_CASE("signal CSV") {
  const PhaseGrid grid = make_grid(4);
  const fs::path p = scratch("sig.csv");
  io::write_text(p, "re,im\n1,0\n0,1\n-1\n0.5,0.5\n");
  const Signal s = io::read_signal_csv(p, grid);
  CHECK(s.values[1] == cplx(0.0, 1.0));
  CHECK(s.values[2] == cplx(-1.0, 0.0));

  try {
    io::read_signal_csv(p, make_grid(16));
    FAIL("expected mismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kInvalidArgument);
    CHECK(std::strstr(e.what(), "signal length mismatch") != nullptr);
    CHECK(std::strstr(e.what(), "L=16") != nullptr);
  }
  const Window w = io::read_window_file(p, grid);
  CHECK(std::abs(w.l2_norm() - 1.0) < 1e-14);
}

TEST_CASE("eigen exports") {
  const PhaseGrid grid = make_grid(16);
  const LocOperator op(gaussian_window(grid), rectangle_mask(grid, -2, -2, 4, 4));
  const EigenSystem e = eigh(op, 3);

  const fs::path csv = scratch("eigs.csv");
  io::write_eigenvalues_csv(csv, e);
  std::istringstream in(io::read_text(csv));
  std::string line;
  std::getline(in, line);
  CHECK(line == "k,lambda");
  std::getline(in, line);
  CHECK(line == "1," + io::format_double(e.eigenvalues[0]));
  std::size_t rows = 1;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 16u);

  const fs::path stem = scratch("vecs");
  io::write_eigenvectors(stem, e);
  CHECK(fs::file_size(fs::path(stem.string() + ".bin")) == 3u * 16u * 16u);
  const auto manifest = nlohmann::json::parse(io::read_text(fs::path(stem.string() + ".json")));
  CHECK(manifest["count"].get<int>() == 3);
  std::ifstream bin(stem.string() + ".bin", std::ios::binary);
  double re = 0.0, im = 0.0;
  bin.read(reinterpret_cast<char*>(&re), 8);
  bin.read(reinterpret_cast<char*>(&im), 8);
  CHECK(re == e.eigenvectors(0, 0).real());
  CHECK(im == e.eigenvectors(0, 0).imag());
}

TEST_CASE("stats JSON keys") {
  PlungeStats s;
  s.area = 1.5;
  s.a_omega = 2;
  const auto j = nlohmann::json::parse(io::stats_json(s, 0.25));
  for (const char* key : {"area", "perimeter", "A", "trace", "trace_sq", "deficit", "eigen_deficit",
                          "l1_error", "mid_count"})
    CHECK(j.contains(key));
  CHECK(j["A"].get<int>() == 2);
  CHECK(j["l1_error"].get<double>() == 0.25);
}
