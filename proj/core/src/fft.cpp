// Copyright 2026 The tflab Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#include "fft.hpp"

#include <map>
#include <mutex>
#include <tuple>

namespace tflab::detail {
namespace {

enum class Kind { kC2C, kR2C2, kC2R2 };

std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

fftw_plan get_plan(Kind kind, std::size_t n, int sign) {
  static std::map<std::tuple<Kind, std::size_t, int>, fftw_plan> cache;
  std::lock_guard lock(planner_mutex());
  const auto key = std::make_tuple(kind, n, sign);
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  fftw_plan plan = nullptr;
  const int ni = static_cast<int>(n);
  switch (kind) {
    case Kind::kC2C: {
      CplxBuffer buf(n);
      auto* p = reinterpret_cast<fftw_complex*>(buf.data());
      plan = fftw_plan_dft_1d(ni, p, p, sign, FFTW_ESTIMATE);
      break;
    }
    case Kind::kR2C2: {
      RealBuffer in(n * n);
      CplxBuffer out(n * (n / 2 + 1));
      plan = fftw_plan_dft_r2c_2d(ni, ni, in.data(),
                                  reinterpret_cast<fftw_complex*>(out.data()),
                                  FFTW_ESTIMATE);
      break;
    }
    case Kind::kC2R2: {
      CplxBuffer in(n * (n / 2 + 1));
      RealBuffer out(n * n);
      plan = fftw_plan_dft_c2r_2d(ni, ni, reinterpret_cast<fftw_complex*>(in.data()),
                                  out.data(), FFTW_ESTIMATE);
      break;
    }
  }
  cache.emplace(key, plan);
  return plan;
}

}  // namespace

void fft_inplace(std::complex<double>* data, std::size_t n, int sign) {
  auto* p = reinterpret_cast<fftw_complex*>(data);
  fftw_execute_dft(get_plan(Kind::kC2C, n, sign > 0 ? FFTW_BACKWARD : FFTW_FORWARD), p, p);
}

void rfft2(const double* in, std::complex<double>* out, std::size_t n) {
  fftw_execute_dft_r2c(get_plan(Kind::kR2C2, n, 0), const_cast<double*>(in),
                       reinterpret_cast<fftw_complex*>(out));
}

void irfft2(std::complex<double>* in, double* out, std::size_t n) {
  fftw_execute_dft_c2r(get_plan(Kind::kC2R2, n, 0),
                       reinterpret_cast<fftw_complex*>(in), out);
}

}  // namespace tflab::detail
