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

#pragma once

// Complex BLAS-1/2/3 style inner loops used by the FEF machinery.
//
// Every routine has a portable scalar reference implementation and, on x86-64
// builds, an AVX2/FMA variant. The variant is picked once per process by
// active_kernels(); FEFKIT_KERNELS=scalar|avx2 in the environment overrides
// the automatic choice (an unavailable request falls back to scalar).
//
// All matrices are dense, row-major and contiguous. std::complex<double> is
// array-compatible with double[2], which the SIMD variants rely on.

#include <complex>
#include <cstddef>

namespace fefkit::kernels {

using Complex = std::complex<double>;

enum class Backend { kScalar, kAvx2 };

struct KernelTable {
  Backend backend;
  const char* name;

  // sum_i x[i] * y[i]
  Complex (*dotu)(const Complex* x, const Complex* y, std::size_t n);
  // sum_i conj(x[i]) * y[i]
  Complex (*dotc)(const Complex* x, const Complex* y, std::size_t n);
  // y += alpha * x
  void (*axpy)(Complex alpha, const Complex* x, Complex* y, std::size_t n);
  // y = A x with A rows x cols; y must not alias A or x.
  void (*gemv)(const Complex* a, std::size_t rows, std::size_t cols,
               const Complex* x, Complex* y);
  // C = A B with A m x k, B k x n; C must not alias A or B.
  void (*gemm)(const Complex* a, const Complex* b, Complex* c, std::size_t m,
               std::size_t k, std::size_t n);
};

const KernelTable& scalar_kernels();

// nullptr when the variant was not compiled in or the CPU lacks AVX2+FMA.
const KernelTable* avx2_kernels();

const KernelTable& active_kernels();

bool cpu_supports_avx2();

}  // namespace fefkit::kernels
