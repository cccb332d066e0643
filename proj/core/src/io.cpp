// Copyright 2026 The tflab Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include "tflab/io.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "tflab/error.hpp"

namespace tflab::io {
namespace {

using json = nlohmann::ordered_json;

// Display row/column i maps to lattice index i - L/2 (mod L).
std::size_t lattice_index(const PhaseGrid& grid, std::size_t display) {
  return grid.wrap(static_cast<long>(display) - static_cast<long>(grid.size() / 2));
}

std::ifstream open_in(const fs::path& path, std::ios::openmode mode = std::ios::in) {
  std::ifstream in(path, mode);
  if (!in) fail(ErrorKind::kIo, "cannot open '" + path.string() + "' for reading");
  return in;
}

std::ofstream open_out(const fs::path& path, std::ios::openmode mode = std::ios::out) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, mode | std::ios::trunc);
  if (!out) fail(ErrorKind::kIo, "cannot open '" + path.string() + "' for writing");
  return out;
}

std::vector<double> split_numbers(const std::string& line, const fs::path& path) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= line.size()) {
    std::size_t comma = line.find(',', pos);
    if (comma == std::string::npos) comma = line.size();
    std::string cell = line.substr(pos, comma - pos);
    cell.erase(std::remove_if(cell.begin(), cell.end(), [](unsigned char c) { return std::isspace(c); }),
               cell.end());
    char* end = nullptr;
    const double v = std::strtod(cell.c_str(), &end);
    if (cell.empty() || end != cell.c_str() + cell.size()) {
      fail(ErrorKind::kInvalidArgument, "non-numeric entry '" + cell + "' in " + path.string());
    }
    out.push_back(v);
    pos = comma + 1;
  }
  return out;
}

bool looks_numeric(const std::string& line) {
  for (char c : line) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '.';
  }
  return false;
}

// Reads the next whitespace separated PBM header token, skipping comments.
std::string pbm_token(std::istream& in) {
  std::string tok;
  char c = 0;
  while (in.get(c)) {
    if (c == '#') {
      std::string rest;
      std::getline(in, rest);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (!tok.empty()) break;
      continue;
    }
    tok.push_back(c);
  }
  return tok;
}

}  // namespace

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_text(const fs::path& path, const std::string& text) {
  auto out = open_out(path, std::ios::binary);
  out << text;
}

std::string read_text(const fs::path& path) {
  auto in = open_in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_field_csv(const fs::path& path, const RealField& field) {
  const PhaseGrid& grid = field.grid();
  const std::size_t L = grid.size();
  auto out = open_out(path, std::ios::binary);
  out << "L,delta\n" << L << ',' << format_double(grid.delta()) << '\n';
  std::string line;
  for (std::size_t i = 0; i < L; ++i) {
    const std::size_t m = lattice_index(grid, i);
    line.clear();
    for (std::size_t j = 0; j < L; ++j) {
      if (j) line.push_back(',');
      line += format_double(field(m, lattice_index(grid, j)));
    }
    line.push_back('\n');
    out << line;
  }
}

RealField read_field_csv(const fs::path& path) {
  auto in = open_in(path);
  std::string line;
  std::getline(in, line);
  if (line.rfind("L,delta", 0) != 0) {
    fail(ErrorKind::kInvalidArgument, path.string() + ": missing 'L,delta' header");
  }
  std::getline(in, line);
  const auto head = split_numbers(line, path);
  require(head.size() == 2 && head[0] >= 4, path.string() + ": bad L,delta line");
  const PhaseGrid grid(static_cast<std::size_t>(head[0]));
  RealField field(grid);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!std::getline(in, line)) fail(ErrorKind::kInvalidArgument, path.string() + ": too few rows");
    const auto row = split_numbers(line, path);
    require(row.size() == grid.size(), path.string() + ": row length differs from L");
    const std::size_t m = lattice_index(grid, i);
    for (std::size_t j = 0; j < grid.size(); ++j) field(m, lattice_index(grid, j)) = row[j];
  }
  return field;
}

void write_field_pgm(const fs::path& path, const RealField& field) {
  const PhaseGrid& grid = field.grid();
  const std::size_t L = grid.size();
  const auto vals = field.values();
  const auto [lo_it, hi_it] = std::minmax_element(vals.begin(), vals.end());
  const double lo = *lo_it;
  const double hi = *hi_it;
  const double scale = hi > lo ? 65535.0 / (hi - lo) : 0.0;

  auto out = open_out(path, std::ios::binary);
  out << "P5\n" << L << ' ' << L << "\n65535\n";
  std::vector<unsigned char> row(2 * L);
  for (std::size_t i = 0; i < L; ++i) {
    const std::size_t m = lattice_index(grid, i);
    for (std::size_t j = 0; j < L; ++j) {
      const double v = (field(m, lattice_index(grid, j)) - lo) * scale;
      const auto q = static_cast<unsigned>(std::lround(std::clamp(v, 0.0, 65535.0)));
      row[2 * j] = static_cast<unsigned char>(q >> 8);
      row[2 * j + 1] = static_cast<unsigned char>(q & 0xff);
    }
    out.write(reinterpret_cast<const char*>(row.data()), static_cast<std::streamsize>(row.size()));
  }

  json side;
  side["L"] = L;
  side["delta"] = grid.delta();
  side["min"] = lo;
  side["max"] = hi;
  side["maxval"] = 65535;
  side["layout"] = "row = time, column = frequency, origin at (L/2, L/2)";
  write_text(fs::path(path.string() + ".json"), side.dump(2) + "\n");
}

DomainMask read_mask_pbm(const fs::path& path, const PhaseGrid& grid) {
  auto in = open_in(path, std::ios::binary);
  const std::string magic = pbm_token(in);
  require(magic == "P1" || magic == "P4", path.string() + ": not a PBM file");
  const std::string ws = pbm_token(in);
  const std::string hs = pbm_token(in);
  const std::size_t w = std::strtoul(ws.c_str(), nullptr, 10);
  const std::size_t h = std::strtoul(hs.c_str(), nullptr, 10);
  const std::size_t L = grid.size();
  if (w != L || h != L) {
    fail(ErrorKind::kInvalidArgument, path.string() + ": image is " + ws + "x" + hs +
                                          " but the grid needs " + std::to_string(L) + "x" +
                                          std::to_string(L));
  }
  std::vector<std::uint8_t> cells(grid.cells(), 0);
  auto set = [&](std::size_t i, std::size_t j, bool v) {
    cells[lattice_index(grid, i) * L + lattice_index(grid, j)] = v;
  };
  if (magic == "P1") {
    for (std::size_t i = 0; i < L; ++i) {
      for (std::size_t j = 0; j < L; ++j) {
        char c = 0;
        do {
          if (!in.get(c)) fail(ErrorKind::kInvalidArgument, path.string() + ": truncated PBM");
          if (c == '#') {
            std::string rest;
            std::getline(in, rest);
            c = ' ';
          }
        } while (std::isspace(static_cast<unsigned char>(c)));
        require(c == '0' || c == '1', path.string() + ": bad P1 pixel");
        set(i, j, c == '1');
      }
    }
  } else {
    const std::size_t stride = (L + 7) / 8;
    std::vector<unsigned char> row(stride);
    for (std::size_t i = 0; i < L; ++i) {
      if (!in.read(reinterpret_cast<char*>(row.data()), static_cast<std::streamsize>(stride))) {
        fail(ErrorKind::kInvalidArgument, path.string() + ": truncated PBM");
      }
      for (std::size_t j = 0; j < L; ++j) set(i, j, (row[j / 8] >> (7 - j % 8)) & 1u);
    }
  }
  return DomainMask(grid, std::move(cells));
}

void write_mask_pbm(const fs::path& path, const DomainMask& mask, bool binary) {
  const PhaseGrid& grid = mask.grid();
  const std::size_t L = grid.size();
  auto out = open_out(path, std::ios::binary);
  out << (binary ? "P4\n" : "P1\n") << L << ' ' << L << '\n';
  for (std::size_t i = 0; i < L; ++i) {
    const std::size_t m = lattice_index(grid, i);
    if (binary) {
      std::vector<unsigned char> row((L + 7) / 8, 0);
      for (std::size_t j = 0; j < L; ++j) {
        if (mask(m, lattice_index(grid, j))) row[j / 8] |= static_cast<unsigned char>(0x80u >> (j % 8));
      }
      out.write(reinterpret_cast<const char*>(row.data()), static_cast<std::streamsize>(row.size()));
    } else {
      std::string line;
      for (std::size_t j = 0; j < L; ++j) {
        if (j) line.push_back(' ');
        line.push_back(mask(m, lattice_index(grid, j)) ? '1' : '0');
      }
      out << line << '\n';
    }
  }
}

DomainMask mask_from_json(const std::string& text, const PhaseGrid& grid) {
  json d;
  try {
    d = json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorKind::kInvalidArgument, std::string("mask descriptor is not valid JSON: ") + e.what());
  }
  try {
    const std::string shape = d.at("shape").get<std::string>();
    if (shape == "disk") {
      Point2 c{0.0, 0.0};
      if (d.contains("center")) c = {d["center"].at(0).get<double>(), d["center"].at(1).get<double>()};
      return disk_mask(grid, c, d.at("R").get<double>());
    }
    if (shape == "rectangle") {
      long m0 = 0, n0 = 0;
      const auto rows = d.at("rows").get<std::size_t>();
      const auto cols = d.at("cols").get<std::size_t>();
      if (d.contains("origin")) {
        m0 = d["origin"].at(0).get<long>();
        n0 = d["origin"].at(1).get<long>();
      } else {
        m0 = -static_cast<long>(rows / 2);
        n0 = -static_cast<long>(cols / 2);
      }
      return rectangle_mask(grid, m0, n0, rows, cols);
    }
    if (shape == "lshape") {
      return lshape_mask(grid, d.at("arm").get<std::size_t>(), d.at("cut").get<std::size_t>());
    }
    if (shape == "blobs") {
      std::mt19937_64 rng(d.value("seed", std::uint64_t{0}));
      return blob_mask(grid, d.value("count", 10), rng);
    }
    if (shape == "full") return full_mask(grid);
    fail(ErrorKind::kInvalidArgument, "unknown mask shape '" + shape + "'");
  } catch (const json::exception& e) {
    fail(ErrorKind::kInvalidArgument, std::string("bad mask descriptor: ") + e.what());
  }
}

DomainMask load_mask(const fs::path& path, const PhaseGrid& grid) {
  if (!fs::exists(path)) fail(ErrorKind::kIo, "mask file '" + path.string() + "' not found");
  const std::string text = read_text(path);
  if (text.rfind("P1", 0) == 0 || text.rfind("P4", 0) == 0) return read_mask_pbm(path, grid);
  return mask_from_json(text, grid);
}

Signal read_signal_csv(const fs::path& path, const PhaseGrid& grid) {
  if (!fs::exists(path)) fail(ErrorKind::kIo, "signal file '" + path.string() + "' not found");
  auto in = open_in(path);
  std::vector<cplx> values;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (first && !looks_numeric(line)) {
      first = false;
      continue;
    }
    first = false;
    const auto nums = split_numbers(line, path);
    require(nums.size() == 1 || nums.size() == 2, path.string() + ": expected 're' or 're,im' per line");
    values.emplace_back(nums[0], nums.size() == 2 ? nums[1] : 0.0);
  }
  if (values.size() != grid.size()) {
    fail(ErrorKind::kInvalidArgument, "signal length mismatch: " + path.string() + " has " +
                                          std::to_string(values.size()) + " samples but L=" +
                                          std::to_string(grid.size()));
  }
  return Signal(grid, std::move(values));
}

Window read_window_file(const fs::path& path, const PhaseGrid& grid) {
  Signal s = read_signal_csv(path, grid);
  return Window::from_values(grid, std::move(s.values), "file:" + path.filename().string());
}

void write_eigenvalues_csv(const fs::path& path, const EigenSystem& eigs) {
  auto out = open_out(path, std::ios::binary);
  out << "k,lambda\n";
  for (std::size_t k = 0; k < eigs.count(); ++k) {
    out << k + 1 << ',' << format_double(eigs.eigenvalues[k]) << '\n';
  }
}

void write_eigenvectors(const fs::path& stem, const EigenSystem& eigs) {
  const fs::path bin = fs::path(stem.string() + ".bin");
  auto out = open_out(bin, std::ios::binary);
  const auto L = static_cast<Eigen::Index>(eigs.grid.size());
  for (std::size_t k = 0; k < eigs.vector_count(); ++k) {
    for (Eigen::Index t = 0; t < L; ++t) {
      const cplx v = eigs.eigenvectors(t, static_cast<Eigen::Index>(k));
      for (double part : {v.real(), v.imag()}) {
        auto bits = std::bit_cast<std::uint64_t>(part);
        if constexpr (std::endian::native == std::endian::big) bits = __builtin_bswap64(bits);
        out.write(reinterpret_cast<const char*>(&bits), sizeof bits);
      }
    }
  }
  json manifest;
  manifest["L"] = eigs.grid.size();
  manifest["count"] = eigs.vector_count();
  manifest["file"] = bin.filename().string();
  manifest["dtype"] = "complex128, little-endian (re, im)";
  manifest["layout"] = "vector-major: vector k occupies samples [k*L, (k+1)*L)";
  manifest["eigenvalues"] = std::vector<double>(
      eigs.eigenvalues.begin(), eigs.eigenvalues.begin() + static_cast<long>(eigs.vector_count()));
  write_text(fs::path(stem.string() + ".json"), manifest.dump(2) + "\n");
}

std::string stats_json(const PlungeStats& stats, double l1_error) {
  json j;
  j["area"] = stats.area;
  j["perimeter"] = stats.perimeter;
  j["A"] = stats.a_omega;
  j["trace"] = stats.trace;
  j["trace_sq"] = stats.trace_sq;
  j["deficit"] = stats.deficit;
  j["eigen_deficit"] = stats.eigen_deficit;
  j["l1_error"] = l1_error;
  j["mid_count"] = stats.mid_count;
  j["mid_delta"] = stats.delta;
  j["spectrum_complete"] = stats.spectrum_complete;
  return j.dump(2) + "\n";
}

}  // namespace tflab::io
