// Copyright 2026 The tflab Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include <algorithm>
#include <cmath>

#include "tflab/bench.hpp"
#include "tflab/error.hpp"

namespace tflab::bench {
namespace {

std::size_t cells_for(const PhaseGrid& grid, double length) {
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::lround(length * grid.side())));
}

}  // namespace

std::vector<NamedMask> regression_corpus(const PhaseGrid& grid, std::uint64_t seed,
                                         int blob_masks) {
  require(grid.size() >= 64, "the regression corpus needs L >= 64");
  std::vector<NamedMask> out;
  const double radius = std::min(2.0, 0.3 * grid.side());
  out.push_back({"disk", disk_mask(grid, {0.0, 0.0}, radius)});

  const std::size_t sq = cells_for(grid, 3.0);
  const long sq0 = -static_cast<long>(sq / 2);
  out.push_back({"square", rectangle_mask(grid, sq0, sq0, sq, sq)});

  const std::size_t long_side = cells_for(grid, 4.0);
  const std::size_t short_side = cells_for(grid, 1.0);
  out.push_back({"rectangle-4x1",
                 rectangle_mask(grid, -static_cast<long>(long_side / 2),
                                -static_cast<long>(short_side / 2), long_side, short_side)});

  out.push_back({"lshape", lshape_mask(grid, cells_for(grid, 3.0), cells_for(grid, 1.5))});

  std::mt19937_64 rng(seed);
  for (int b = 0; b < blob_masks; ++b) {
    out.push_back({"blobs-" + std::to_string(b), blob_mask(grid, 10, rng)});
  }
  return out;
}

std::vector<Window> corpus_windows(const PhaseGrid& grid) {
  return {gaussian_window(grid), hann_window(grid, 2.0), boxcar_window(grid, 1.0)};
}

}  // namespace tflab::bench
