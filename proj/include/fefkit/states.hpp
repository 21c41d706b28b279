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
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "fefkit/complex_matrix.hpp"
#include "fefkit/random.hpp"

namespace fefkit {

inline constexpr double kNormTolerance = 1e-10;
inline constexpr double kTraceTolerance = 1e-9;
inline constexpr double kPositivityTolerance = 1e-9;
inline constexpr double kProbabilityTolerance = 1e-12;

enum class ValidationFailure {
  kWrongSize,
  kNonFinite,
  kNotHermitian,
  kBadTrace,
  kNotPositive,
  kNotNormalized,
};

const char* to_string(ValidationFailure failure);

/// Rejected state data. kind() distinguishes the violated invariant; the
/// message carries positions where one applies.
class ValidationError : public std::invalid_argument {
 public:
  ValidationError(ValidationFailure kind, const std::string& message)
      : std::invalid_argument(message), kind_(kind) {}
  ValidationFailure kind() const { return kind_; }

 private:
  ValidationFailure kind_;
};

class DensityMatrix;

/// Unit vector over the composite basis |a, k>, index a * d + k.
class PureState {
 public:
  /// Throws ValidationError unless the amplitudes have length d^2, are finite
  /// and have unit norm within kNormTolerance.
  static PureState from_amplitudes(std::size_t d, ComplexVector amplitudes);
  /// Scales nonzero amplitudes to unit norm first.
  static PureState normalized(std::size_t d, ComplexVector amplitudes);

  std::size_t d() const { return d_; }
  std::span<const Complex> amplitudes() const { return amplitudes_; }
  /// A(a, k) = amplitude of |a, k>.
  ComplexMatrix coefficient_matrix() const;
  /// |psi><psi|
  ComplexMatrix projector() const;
  DensityMatrix density() const;

 private:
  PureState(std::size_t d, ComplexVector amplitudes)
      : d_(d), amplitudes_(std::move(amplitudes)) {}

  std::size_t d_;
  ComplexVector amplitudes_;
};

/// Hermitian, unit-trace, positive semidefinite d^2 x d^2 operator. Only
/// obtainable through validate_density, so holding one means the invariants
/// were checked.
class DensityMatrix {
 public:
  std::size_t d() const { return d_; }
  const ComplexMatrix& matrix() const { return matrix_; }

 private:
  friend DensityMatrix validate_density(const ComplexMatrix& rho,
                                        std::size_t d);
  DensityMatrix(std::size_t d, ComplexMatrix m)
      : d_(d), matrix_(std::move(m)) {}

  std::size_t d_;
  ComplexMatrix matrix_;
};

/// Checks size, finiteness, Hermiticity (1e-10), trace (1e-9) and smallest
/// eigenvalue (>= -1e-9), then stores the Hermitian part.
DensityMatrix validate_density(const ComplexMatrix& rho, std::size_t d);

struct SchmidtDecomposition {
  std::vector<double> coefficients;  // nonincreasing, lambda_1 largest
  ComplexMatrix u1;
  ComplexMatrix u2;  // (u1 (x) u2)|psi> = sum_j coefficients[j] |jj>
};

SchmidtDecomposition schmidt_decompose(const PureState& psi);

/// (1/sqrt(d)) sum_k |kk>
PureState max_entangled(std::size_t d);
/// |a, k>
PureState basis_state(std::size_t d, std::size_t a, std::size_t k);

/// V = sum_ij |ij><ji|
ComplexMatrix swap_operator(std::size_t d);

/// (1-f)/(d^2-1) I + (d^2 f - 1)/(d^2-1) |psi+><psi+|, f in [0, 1].
DensityMatrix isotropic(std::size_t d, double f);
/// (d-f)/(d^3-d) I + (d f - 1)/(d^3-d) V, f in [-1, 1]. The parameter is
/// f = tr(rho V).
DensityMatrix werner(std::size_t d, double f);

/// sum_i p[i] |i, sigma(i)><i, sigma(i)| with a 0-based permutation sigma.
DensityMatrix permutation_mixture(std::size_t d,
                                  std::span<const std::size_t> sigma,
                                  std::span<const double> p);

/// sum_i weights[i] |psi_i><psi_i|
DensityMatrix mixture(std::span<const double> weights,
                      std::span<const PureState> pures);

/// Throws std::invalid_argument unless p is nonnegative and sums to 1.
void check_probabilities(std::span<const double> p,
                         double tolerance = kProbabilityTolerance);

/// Haar pure state from d^2 complex Gaussian amplitudes.
PureState random_pure(std::size_t d, Rng& rng);
PureState random_pure(std::size_t d, std::uint64_t seed);

/// G G^dagger / tr(G G^dagger), G a d^2 x rank complex Gaussian matrix.
DensityMatrix random_density(std::size_t d, std::size_t rank, Rng& rng);
DensityMatrix random_density(std::size_t d, std::size_t rank,
                             std::uint64_t seed);

}  // namespace fefkit
