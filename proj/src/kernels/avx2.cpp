// Copyright 2026 The fefkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Compiled with -mavx2 -mfma; only reached through the dispatch table after a
// CPUID check, so nothing in here may be inlined into generic code.

#include <immintrin.h>

#include <cstring>

#include "fefkit/kernels/kernels.hpp"

namespace fefkit::kernels {
namespace {

// One __m256d holds two complex numbers laid out as [re0, im0, re1, im1].

inline __m256d Load2(const Complex* p) {
  return _mm256_loadu_pd(reinterpret_cast<const double*>(p));
}

inline __m128d HalfSum(__m256d v) {
  return _mm_add_pd(_mm256_castpd256_pd128(v), _mm256_extractf128_pd(v, 1));
}

// Accumulates [xr*yr, xi*yr] into acc_re and [xr*yi, xi*yi] into acc_im.
inline void MulAccumulate(__m256d x, __m256d y, __m256d& acc_re,
                          __m256d& acc_im) {
  const __m256d yr = _mm256_movedup_pd(y);
  const __m256d yi = _mm256_permute_pd(y, 0xF);
  acc_re = _mm256_fmadd_pd(x, yr, acc_re);
  acc_im = _mm256_fmadd_pd(x, yi, acc_im);
}

Complex DotuAvx2(const Complex* x, const Complex* y, std::size_t n) {
  __m256d acc_re = _mm256_setzero_pd();
  __m256d acc_im = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    MulAccumulate(Load2(x + i), Load2(y + i), acc_re, acc_im);
  }
  alignas(16) double s_re[2];
  alignas(16) double s_im[2];
  _mm_store_pd(s_re, HalfSum(acc_re));
  _mm_store_pd(s_im, HalfSum(acc_im));
  double re = s_re[0] - s_im[1];
  double im = s_re[1] + s_im[0];
  for (; i < n; ++i) {
    re += x[i].real() * y[i].real() - x[i].imag() * y[i].imag();
    im += x[i].real() * y[i].imag() + x[i].imag() * y[i].real();
  }
  return {re, im};
}

Complex DotcAvx2(const Complex* x, const Complex* y, std::size_t n) {
  __m256d acc_re = _mm256_setzero_pd();
  __m256d acc_im = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    MulAccumulate(Load2(x + i), Load2(y + i), acc_re, acc_im);
  }
  alignas(16) double s_re[2];
  alignas(16) double s_im[2];
  _mm_store_pd(s_re, HalfSum(acc_re));
  _mm_store_pd(s_im, HalfSum(acc_im));
  double re = s_re[0] + s_im[1];
  double im = s_im[0] - s_re[1];
  for (; i < n; ++i) {
    re += x[i].real() * y[i].real() + x[i].imag() * y[i].imag();
    im += x[i].real() * y[i].imag() - x[i].imag() * y[i].real();
  }
  return {re, im};
}

void AxpyAvx2(Complex alpha, const Complex* x, Complex* y, std::size_t n) {
  const __m256d ar = _mm256_set1_pd(alpha.real());
  const __m256d ai = _mm256_set1_pd(alpha.imag());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = Load2(x + i);
    const __m256d xs = _mm256_permute_pd(xv, 0x5);
    const __m256d prod = _mm256_fmaddsub_pd(xv, ar, _mm256_mul_pd(xs, ai));
    double* out = reinterpret_cast<double*>(y + i);
    _mm256_storeu_pd(out, _mm256_add_pd(_mm256_loadu_pd(out), prod));
  }
  for (; i < n; ++i) {
    const double xr = x[i].real(), xi = x[i].imag();
    y[i] = Complex(y[i].real() + alpha.real() * xr - alpha.imag() * xi,
                   y[i].imag() + alpha.real() * xi + alpha.imag() * xr);
  }
}

void GemvAvx2(const Complex* a, std::size_t rows, std::size_t cols,
              const Complex* x, Complex* y) {
  for (std::size_t r = 0; r < rows; ++r) {
    y[r] = DotuAvx2(a + r * cols, x, cols);
  }
}

void GemmAvx2(const Complex* a, const Complex* b, Complex* c, std::size_t m,
              std::size_t k, std::size_t n) {
  std::memset(static_cast<void*>(c), 0, sizeof(Complex) * m * n);
  for (std::size_t i = 0; i < m; ++i) {
    Complex* crow = c + i * n;
    for (std::size_t p = 0; p < k; ++p) {
      const Complex aip = a[i * k + p];
      if (aip == Complex(0.0, 0.0)) continue;
      AxpyAvx2(aip, b + p * n, crow, n);
    }
  }
}

constexpr KernelTable kAvx2Table{
    Backend::kAvx2, "avx2", DotuAvx2, DotcAvx2, AxpyAvx2, GemvAvx2, GemmAvx2,
};

}  // namespace

// Defined here so the table itself never requires AVX2 to reference.
const KernelTable& avx2_table_unchecked() { return kAvx2Table; }

}  // namespace fefkit::kernels
