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

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "fefkit/complex_matrix.hpp"

namespace fefkit {

/// Max-norm tolerance for inputs that must be Hermitian.
inline constexpr double kHermitianTolerance = 1e-10;
/// Singular values below this make a polar factor non-unique.
inline constexpr double kRankDeficiencyThreshold = 1e-12;

class NotHermitianError : public std::invalid_argument {
 public:
  NotHermitianError(double deviation, std::size_t row, std::size_t col);
  double deviation() const { return deviation_; }
  std::size_t row() const { return row_; }
  std::size_t col() const { return col_; }

 private:
  double deviation_;
  std::size_t row_;
  std::size_t col_;
};

/// (a (x) b)(i*rb + k, j*cb + l) = a(i, j) * b(k, l).
/// Throws std::length_error if the result dimensions overflow size_t.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

struct HermitianEigen {
  std::vector<double> values;  // nonincreasing
  ComplexMatrix vectors;       // column i belongs to values[i]
};

/// Spectral decomposition of a Hermitian matrix. The input is checked against
/// kHermitianTolerance and symmetrized before factorization.
HermitianEigen hermitian_eig(const ComplexMatrix& h);

struct SingularValueDecomposition {
  ComplexMatrix left;                   // rows x rows, unitary
  std::vector<double> singular_values;  // min(rows, cols), nonincreasing
  ComplexMatrix right;                  // cols x cols, unitary
};

/// m = left * diag(singular_values) * right^dagger.
SingularValueDecomposition svd(const ComplexMatrix& m);

struct PolarFactor {
  ComplexMatrix unitary;
  double min_singular_value = 0.0;
  bool rank_deficient = false;  // polar factor not unique
};

/// Unitary polar factor W V^dagger of m = W S V^dagger: the unitary U that
/// maximizes Re tr(U^dagger m).
PolarFactor polar_unitary(const ComplexMatrix& m);

/// Sum of singular values.
double trace_norm(const ComplexMatrix& m);

/// Partial transpose on the first factor of a d x d system:
/// out(a*d+k, b*d+l) = rho(b*d+k, a*d+l).
ComplexMatrix partial_transpose_first(const ComplexMatrix& rho, std::size_t d);

/// Row-major flattening u[a*d + k] = U(a, k) of a square matrix.
ComplexVector vec(const ComplexMatrix& m);
/// Inverse of vec; throws if the length is not a perfect square.
ComplexMatrix unvec(std::span<const Complex> x);

/// Largest entry of |h - h^dagger|, and where it occurs.
struct HermiticityDefect {
  double deviation = 0.0;
  std::size_t row = 0;
  std::size_t col = 0;
};
HermiticityDefect hermiticity_defect(const ComplexMatrix& h);

/// max |U^dagger U - I|
double unitarity_error(const ComplexMatrix& u);

/// (h + h^dagger) / 2
ComplexMatrix hermitian_part(const ComplexMatrix& h);

/// Exact integer square root, or 0 if n is not a perfect square.
std::size_t exact_sqrt(std::size_t n);

}  // namespace fefkit
