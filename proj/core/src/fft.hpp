// Copyright 2026 The tflab Authors
// License: Apache 2.0 (http://www.apache.org/licenses/LICENSE-2.0)

#pragma once

#include <complex>
#include <cstddef>
#include <new>
#include <vector>

#include <fftw3.h>

namespace tflab::detail {

template <class T>
struct FftwAllocator {
  using value_type = T;
  FftwAllocator() = default;
  template <class U>
  FftwAllocator(const FftwAllocator<U>&) noexcept {}

  T* allocate(std::size_t n) {
    void* p = fftw_malloc(n * sizeof(T));
    if (!p) throw std::bad_alloc();
    return static_cast<T*>(p);
  }
  void deallocate(T* p, std::size_t) noexcept { fftw_free(p); }

  template <class U>
  bool operator==(const FftwAllocator<U>&) const noexcept { return true; }
};

using CplxBuffer = std::vector<std::complex<double>, FftwAllocator<std::complex<double>>>;
using RealBuffer = std::vector<double, FftwAllocator<double>>;

// Plans are created once per size with FFTW_ESTIMATE (deterministic across
// runs) and shared; buffers passed in must come from FftwAllocator.

/// Unnormalized in-place DFT of length n. sign = -1 computes
/// sum_t x(t) exp(-2 pi i k t / n); sign = +1 the conjugate kernel.
void fft_inplace(std::complex<double>* data, std::size_t n, int sign);

/// Real-to-half-complex 2-D transform of an n x n row-major array into
/// n x (n/2 + 1) coefficients.
void rfft2(const double* in, std::complex<double>* out, std::size_t n);

/// Inverse of rfft2 without the 1/n^2 factor. `in` is overwritten.
void irfft2(std::complex<double>* in, double* out, std::size_t n);

}  // namespace tflab::detail
