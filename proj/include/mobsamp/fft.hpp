#pragma once

// Iterative radix-2 FFT for power-of-two sizes, plus a row-column 2-D
// transform. Forward: A_k = sum_j a_j e^{-2 pi i jk/n}; inverse includes
// the 1/n normalization.

#include <complex>
#include <cstddef>
#include <vector>

#include "mobsamp/errors.hpp"

namespace mobsamp {

inline bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

inline void fft_inplace(std::complex<double>* a, std::size_t n, bool inverse) {
  if (!is_power_of_two(n)) fail(ErrorCode::InvalidArgument, "FFT size must be a power of two");
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = (inverse ? 2.0 : -2.0) * M_PI / static_cast<double>(len);
    const std::complex<double> wl(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (std::size_t k = 0; k < len / 2; ++k) {
        const std::complex<double> u = a[i + k];
        const std::complex<double> v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
        w *= wl;
      }
    }
  }
  if (inverse) {
    const double inv = 1.0 / static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) a[i] *= inv;
  }
}

inline void fft_inplace(std::vector<std::complex<double>>& a, bool inverse) {
  fft_inplace(a.data(), a.size(), inverse);
}

// Row-major n x n grid, index = ix + n*iy.
inline void fft2_inplace(std::vector<std::complex<double>>& a, std::size_t n, bool inverse) {
  if (a.size() != n * n) fail(ErrorCode::InvalidArgument, "grid size mismatch");
  for (std::size_t row = 0; row < n; ++row) fft_inplace(a.data() + row * n, n, inverse);
  std::vector<std::complex<double>> col(n);
  for (std::size_t cx = 0; cx < n; ++cx) {
    for (std::size_t row = 0; row < n; ++row) col[row] = a[cx + row * n];
    fft_inplace(col.data(), n, inverse);
    for (std::size_t row = 0; row < n; ++row) a[cx + row * n] = col[row];
  }
}

}  // namespace mobsamp
