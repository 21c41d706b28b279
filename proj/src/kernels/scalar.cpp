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

#include "fefkit/kernels/kernels.hpp"

#include <cstring>

namespace fefkit::kernels {
namespace {

// Written on explicit re/im parts: std::complex multiplication goes through
// the NaN-recovering libgcc path without -ffast-math.

Complex DotuScalar(const Complex* x, const Complex* y, std::size_t n) {
  double re = 0.0;
  double im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double xr = x[i].real(), xi = x[i].imag();
    const double yr = y[i].real(), yi = y[i].imag();
    re += xr * yr - xi * yi;
    im += xr * yi + xi * yr;
  }
  return {re, im};
}

Complex DotcScalar(const Complex* x, const Complex* y, std::size_t n) {
  double re = 0.0;
  double im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double xr = x[i].real(), xi = x[i].imag();
    const double yr = y[i].real(), yi = y[i].imag();
    re += xr * yr + xi * yi;
    im += xr * yi - xi * yr;
  }
  return {re, im};
}

void AxpyScalar(Complex alpha, const Complex* x, Complex* y, std::size_t n) {
  const double ar = alpha.real(), ai = alpha.imag();
  for (std::size_t i = 0; i < n; ++i) {
    const double xr = x[i].real(), xi = x[i].imag();
    y[i] = Complex(y[i].real() + ar * xr - ai * xi,
                   y[i].imag() + ar * xi + ai * xr);
  }
}

void GemvScalar(const Complex* a, std::size_t rows, std::size_t cols,
                const Complex* x, Complex* y) {
  for (std::size_t r = 0; r < rows; ++r) {
    y[r] = DotuScalar(a + r * cols, x, cols);
  }
}

void GemmScalar(const Complex* a, const Complex* b, Complex* c, std::size_t m,
                std::size_t k, std::size_t n) {
  std::memset(static_cast<void*>(c), 0, sizeof(Complex) * m * n);
  for (std::size_t i = 0; i < m; ++i) {
    Complex* crow = c + i * n;
    for (std::size_t p = 0; p < k; ++p) {
      const Complex aip = a[i * k + p];
      if (aip == Complex(0.0, 0.0)) continue;
      AxpyScalar(aip, b + p * n, crow, n);
    }
  }
}

constexpr KernelTable kScalarTable{
    Backend::kScalar, "scalar", DotuScalar, DotcScalar,
    AxpyScalar,       GemvScalar, GemmScalar,
};

}  // namespace

const KernelTable& scalar_kernels() { return kScalarTable; }

}  // namespace fefkit::kernels
