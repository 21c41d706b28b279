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

// Closed-form fully entangled fraction values, entanglement-measure relations
// and bounds for d x d states.

#include <cstddef>
#include <span>
#include <vector>

#include "fefkit/complex_matrix.hpp"
#include "fefkit/numeric.hpp"
#include "fefkit/states.hpp"

namespace fefkit {

/// (sum_i lambda_i)^2 / d over the Schmidt coefficients.
double fef_pure(const PureState& psi);

/// f for f >= 1/d^2, else (1 - f)/(d^2 - 1). f in [0, 1].
double fef_isotropic(std::size_t d, double f);

/// (f + 1)/(d(d + 1)) for f >= 1/d. Below 1/d: (1 - f)/(d(d - 1)) for even d,
/// (d^2 - d^2 f + d f + d - 2)/(d^2 (d^2 - 1)) for odd d. f in [-1, 1].
double fef_werner(std::size_t d, double f);

/// (||rho^{T1}||_1 - 1) / 2
double negativity(const DensityMatrix& rho);
double negativity(const PureState& psi);

struct GeometricMeasure {
  double e = 0.0;              // 1 - lambda_1^2
  double lambda_max_sq = 0.0;  // max overlap with a product state
};
GeometricMeasure geometric_measure_pure(const PureState& psi);

/// sqrt(2 (1 - sum_i lambda_i^4))
double concurrence_pure(const PureState& psi);

/// max{ sqrt(2/(d(d-1))) (d F - 1), 0 }; F must lie in [1/d^2, 1].
double concurrence_lower_bound(double fef, std::size_t d);

/// sum_i p_i fef_pure(psi_i); never below the FEF of the mixture.
double mixture_upper_bound(std::span<const double> weights,
                           std::span<const PureState> pures);

struct ClosestMes {
  PureState mes;          // (W (x) I)|psi+>
  ComplexMatrix unitary;  // W = u1^dagger u2^* from the Schmidt decomposition
  double overlap = 0.0;   // |<psi|mes>|^2 = fef_pure(psi)
};
ClosestMes closest_mes_pure(const PureState& psi);

enum class ConditionStatus { kSatisfied, kViolated, kIndeterminate };
const char* to_string(ConditionStatus status);

struct DecompositionCheckResult {
  double fef_mixture = 0.0;        // numeric FEF of sum p_t |psi_t><psi_t|
  double weighted_pure_sum = 0.0;  // sum p_t fef_pure(psi_t)
  bool equality_holds = false;     // agree within 1e-6
  ConditionStatus condition_status = ConditionStatus::kIndeterminate;
};

/// Tests whether the mixture attains its pure-decomposition upper bound, and
/// separately whether every component's u1^dagger u2^* agrees up to a global
/// phase. Components with repeated or vanishing Schmidt coefficients have no
/// unique local unitaries, which makes the phase test indeterminate.
DecompositionCheckResult decomposition_equality_check(
    std::span<const double> weights, std::span<const PureState> pures,
    const OptimizerConfig& config = {});

/// min over theta of max|a - e^{i theta} b|, attained at theta = arg tr(b^dagger a).
double phase_aligned_distance(const ComplexMatrix& a, const ComplexMatrix& b);

struct Superposition {
  PureState state;     // (1/gamma) sum_i c_i |phi_i>
  double gamma = 0.0;  // norm of sum_i c_i |phi_i>
};
/// Throws std::invalid_argument for a vanishing superposition.
Superposition superpose(std::span<const Complex> coefficients,
                        std::span<const PureState> states);

/// Bounds on |gamma| F^{1/2}(psi) for psi = (1/gamma) sum_i c_i |phi_i>:
///   lower = max{ max_i (|c_i| F_i^{1/2} - sum_{j != i} |c_j| F_j^{1/2}), 1/d^2 }
///   upper = min{ sum_i |c_i| F_i^{1/2}, 1 }
/// The *_uncapped fields drop the 1/d^2 floor and the 1 ceiling; they are the
/// triangle inequalities for the trace norm of the coefficient matrix and hold
/// for every gamma. The capped pair holds only for |gamma| not far from 1.
struct SuperpositionBounds {
  double lower = 0.0;
  double upper = 0.0;
  double lower_uncapped = 0.0;
  double upper_uncapped = 0.0;
};
SuperpositionBounds superposition_bounds(Complex alpha, Complex beta,
                                         const PureState& phi1,
                                         const PureState& phi2);
SuperpositionBounds superposition_bounds(std::span<const Complex> coefficients,
                                         std::span<const PureState> states);

struct Teleportation {
  double fidelity = 0.0;  // (F d + 1)/(d + 1)
  bool useful = false;    // F > 1/d
};
Teleportation teleportation_fidelity(double fef, std::size_t d);

struct FefRange {
  double low = 0.0;
  double high = 1.0;
};
/// [1/d^2, 1], the range every FEF value must fall in.
FefRange fef_range_bounds(const DensityMatrix& rho);

}  // namespace fefkit
