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

#include "fefkit/states.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "fefkit/linalg.hpp"

namespace fefkit {
namespace {

void RequireDimension(std::size_t d, const char* what) {
  if (d < 2) {
    throw std::invalid_argument(std::string(what) +
                                ": local dimension must be >= 2, got " +
                                std::to_string(d));
  }
}

std::string Fmt(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

}  // namespace

const char* to_string(ValidationFailure failure) {
  switch (failure) {
    case ValidationFailure::kWrongSize: return "wrong size";
    case ValidationFailure::kNonFinite: return "non-finite entry";
    case ValidationFailure::kNotHermitian: return "not Hermitian";
    case ValidationFailure::kBadTrace: return "trace not 1";
    case ValidationFailure::kNotPositive: return "not positive semidefinite";
    case ValidationFailure::kNotNormalized: return "not normalized";
  }
  return "unknown";
}

PureState PureState::from_amplitudes(std::size_t d, ComplexVector amplitudes) {
  RequireDimension(d, "PureState");
  if (amplitudes.size() != d * d) {
    throw ValidationError(ValidationFailure::kWrongSize,
                          "pure state: expected " + std::to_string(d * d) +
                              " amplitudes, got " +
                              std::to_string(amplitudes.size()));
  }
  for (std::size_t i = 0; i < amplitudes.size(); ++i) {
    if (!std::isfinite(amplitudes[i].real()) ||
        !std::isfinite(amplitudes[i].imag())) {
      throw ValidationError(ValidationFailure::kNonFinite,
                            "pure state: amplitude " + std::to_string(i) +
                                " is not finite");
    }
  }
  const double n = norm(amplitudes);
  if (std::abs(n * n - 1.0) > kNormTolerance) {
    throw ValidationError(ValidationFailure::kNotNormalized,
                          "pure state: squared norm " + Fmt(n * n) +
                              " differs from 1");
  }
  return PureState(d, std::move(amplitudes));
}

PureState PureState::normalized(std::size_t d, ComplexVector amplitudes) {
  const double n = norm(amplitudes);
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw ValidationError(ValidationFailure::kNotNormalized,
                          "pure state: cannot normalize a zero vector");
  }
  for (auto& z : amplitudes) z /= n;
  return from_amplitudes(d, std::move(amplitudes));
}

ComplexMatrix PureState::coefficient_matrix() const { return unvec(amplitudes_); }

ComplexMatrix PureState::projector() const {
  return ComplexMatrix::outer(amplitudes_, amplitudes_);
}

DensityMatrix PureState::density() const {
  return validate_density(projector(), d_);
}

DensityMatrix validate_density(const ComplexMatrix& rho, std::size_t d) {
  RequireDimension(d, "density matrix");
  if (rho.rows() != d * d || rho.cols() != d * d) {
    throw ValidationError(
        ValidationFailure::kWrongSize,
        "density matrix: expected " + std::to_string(d * d) + "x" +
            std::to_string(d * d) + ", got " + std::to_string(rho.rows()) +
            "x" + std::to_string(rho.cols()));
  }
  for (std::size_t r = 0; r < rho.rows(); ++r) {
    for (std::size_t c = 0; c < rho.cols(); ++c) {
      const Complex z = rho(r, c);
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw ValidationError(ValidationFailure::kNonFinite,
                              "density matrix: entry (" + std::to_string(r) +
                                  "," + std::to_string(c) + ") is not finite");
      }
    }
  }
  const HermiticityDefect defect = hermiticity_defect(rho);
  if (defect.deviation > kHermitianTolerance) {
    throw ValidationError(
        ValidationFailure::kNotHermitian,
        "density matrix: not Hermitian at (" + std::to_string(defect.row) +
            "," + std::to_string(defect.col) + "), deviation " +
            Fmt(defect.deviation));
  }
  ComplexMatrix sym = hermitian_part(rho);
  const double tr = sym.trace().real();
  if (std::abs(tr - 1.0) > kTraceTolerance) {
    throw ValidationError(ValidationFailure::kBadTrace,
                          "density matrix: trace " + Fmt(tr) + " differs from 1");
  }
  const HermitianEigen eig = hermitian_eig(sym);
  const double smallest = eig.values.back();
  if (smallest < -kPositivityTolerance) {
    throw ValidationError(ValidationFailure::kNotPositive,
                          "density matrix: smallest eigenvalue " +
                              Fmt(smallest) + " is negative");
  }
  return DensityMatrix(d, std::move(sym));
}

SchmidtDecomposition schmidt_decompose(const PureState& psi) {
  const SingularValueDecomposition f = svd(psi.coefficient_matrix());
  // A = L S R^dagger, so u1 = L^dagger and u2 = R^T give u1 A u2^T = S.
  return {f.singular_values, f.left.adjoint(), f.right.transpose()};
}

PureState max_entangled(std::size_t d) {
  RequireDimension(d, "max_entangled");
  ComplexVector amps(d * d);
  const double a = 1.0 / std::sqrt(static_cast<double>(d));
  for (std::size_t k = 0; k < d; ++k) amps[k * d + k] = a;
  return PureState::from_amplitudes(d, std::move(amps));
}

PureState basis_state(std::size_t d, std::size_t a, std::size_t k) {
  RequireDimension(d, "basis_state");
  if (a >= d || k >= d) throw std::out_of_range("basis_state: index out of range");
  ComplexVector amps(d * d);
  amps[a * d + k] = 1.0;
  return PureState::from_amplitudes(d, std::move(amps));
}

ComplexMatrix swap_operator(std::size_t d) {
  ComplexMatrix v(d * d, d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) v(i * d + j, j * d + i) = 1.0;
  }
  return v;
}

DensityMatrix isotropic(std::size_t d, double f) {
  RequireDimension(d, "isotropic");
  if (!(f >= 0.0 && f <= 1.0)) {
    throw std::domain_error("isotropic: f = " + Fmt(f) + " outside [0, 1]");
  }
  const double dd = static_cast<double>(d * d);
  ComplexMatrix rho = ComplexMatrix::identity(d * d) * ((1.0 - f) / (dd - 1.0));
  rho += max_entangled(d).projector() * ((dd * f - 1.0) / (dd - 1.0));
  return validate_density(rho, d);
}

DensityMatrix werner(std::size_t d, double f) {
  RequireDimension(d, "werner");
  if (!(f >= -1.0 && f <= 1.0)) {
    throw std::domain_error("werner: f = " + Fmt(f) + " outside [-1, 1]");
  }
  const double dn = static_cast<double>(d);
  const double denom = dn * dn * dn - dn;
  ComplexMatrix rho = ComplexMatrix::identity(d * d) * ((dn - f) / denom);
  rho += swap_operator(d) * ((dn * f - 1.0) / denom);
  return validate_density(rho, d);
}

void check_probabilities(std::span<const double> p, double tolerance) {
  if (p.empty()) throw std::invalid_argument("probability vector is empty");
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!(p[i] >= 0.0) || !std::isfinite(p[i])) {
      throw std::invalid_argument("probability " + std::to_string(i) + " = " +
                                  Fmt(p[i]) + " is not a nonnegative number");
    }
    sum += p[i];
  }
  if (std::abs(sum - 1.0) > tolerance) {
    throw std::invalid_argument("probabilities sum to " + Fmt(sum) +
                                ", not 1");
  }
}

DensityMatrix permutation_mixture(std::size_t d,
                                  std::span<const std::size_t> sigma,
                                  std::span<const double> p) {
  RequireDimension(d, "permutation_mixture");
  if (sigma.size() != d || p.size() != d) {
    throw std::invalid_argument(
        "permutation_mixture: sigma and p must both have length d");
  }
  std::vector<bool> seen(d, false);
  for (std::size_t s : sigma) {
    if (s >= d || seen[s]) {
      throw std::invalid_argument("permutation_mixture: sigma is not a permutation");
    }
    seen[s] = true;
  }
  check_probabilities(p);
  ComplexMatrix rho(d * d, d * d);
  for (std::size_t i = 0; i < d; ++i) {
    const std::size_t idx = i * d + sigma[i];
    rho(idx, idx) = p[i];
  }
  return validate_density(rho, d);
}

DensityMatrix mixture(std::span<const double> weights,
                      std::span<const PureState> pures) {
  if (weights.size() != pures.size() || pures.empty()) {
    throw std::invalid_argument("mixture: need one weight per pure state");
  }
  check_probabilities(weights);
  const std::size_t d = pures.front().d();
  ComplexMatrix rho(d * d, d * d);
  for (std::size_t i = 0; i < pures.size(); ++i) {
    if (pures[i].d() != d) {
      throw std::invalid_argument("mixture: pure states differ in dimension");
    }
    rho += pures[i].projector() * weights[i];
  }
  return validate_density(rho, d);
}

PureState random_pure(std::size_t d, Rng& rng) {
  RequireDimension(d, "random_pure");
  ComplexVector amps(d * d);
  for (auto& z : amps) z = rng.complex_normal();
  return PureState::normalized(d, std::move(amps));
}

PureState random_pure(std::size_t d, std::uint64_t seed) {
  Rng rng(seed);
  return random_pure(d, rng);
}

DensityMatrix random_density(std::size_t d, std::size_t rank, Rng& rng) {
  RequireDimension(d, "random_density");
  if (rank < 1 || rank > d * d) {
    throw std::invalid_argument("random_density: rank " + std::to_string(rank) +
                                " outside [1, " + std::to_string(d * d) + "]");
  }
  ComplexMatrix g(d * d, rank);
  for (auto& z : g.entries()) z = rng.complex_normal();
  ComplexMatrix rho = g * g.adjoint();
  rho *= 1.0 / rho.trace().real();
  return validate_density(rho, d);
}

DensityMatrix random_density(std::size_t d, std::size_t rank,
                             std::uint64_t seed) {
  Rng rng(seed);
  return random_density(d, rank, rng);
}

}  // namespace fefkit
