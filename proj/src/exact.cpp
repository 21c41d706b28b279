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

#include "fefkit/exact.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "fefkit/linalg.hpp"

namespace fefkit {
namespace {

constexpr double kRangeSlack = 1e-9;
constexpr double kEqualityTolerance = 1e-6;
constexpr double kPhaseTolerance = 1e-6;
constexpr double kDegeneracyGap = 1e-8;

void RequireDimension(std::size_t d, const char* what) {
  if (d < 2) {
    throw std::invalid_argument(std::string(what) + ": d must be >= 2");
  }
}

void RequireFefRange(double fef, std::size_t d, const char* what) {
  RequireDimension(d, what);
  const double low = 1.0 / static_cast<double>(d * d);
  if (!(fef >= low - kRangeSlack && fef <= 1.0 + kRangeSlack)) {
    throw std::domain_error(std::string(what) + ": FEF " + std::to_string(fef) +
                            " outside [1/d^2, 1]");
  }
}

double Sum(std::span<const double> xs) {
  return std::accumulate(xs.begin(), xs.end(), 0.0);
}

bool HasGaugeFreedom(std::span<const double> lambda) {
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i] < kDegeneracyGap) return true;
    for (std::size_t j = i + 1; j < lambda.size(); ++j) {
      if (std::abs(lambda[i] - lambda[j]) < kDegeneracyGap) return true;
    }
  }
  return false;
}

ComplexMatrix LocalUnitaryProduct(const SchmidtDecomposition& s) {
  return s.u1.adjoint() * s.u2.conjugate();
}

}  // namespace

double fef_pure(const PureState& psi) {
  const auto lambda = schmidt_decompose(psi).coefficients;
  const double s = Sum(lambda);
  return s * s / static_cast<double>(psi.d());
}

double fef_isotropic(std::size_t d, double f) {
  RequireDimension(d, "fef_isotropic");
  if (!(f >= 0.0 && f <= 1.0)) {
    throw std::domain_error("fef_isotropic: f outside [0, 1]");
  }
  const double dd = static_cast<double>(d * d);
  if (f >= 1.0 / dd) return f;
  return (1.0 - f) / (dd - 1.0);
}

double fef_werner(std::size_t d, double f) {
  RequireDimension(d, "fef_werner");
  if (!(f >= -1.0 && f <= 1.0)) {
    throw std::domain_error("fef_werner: f outside [-1, 1]");
  }
  const double dn = static_cast<double>(d);
  if (f >= 1.0 / dn) return (f + 1.0) / (dn * (dn + 1.0));
  if (d % 2 == 0) return (1.0 - f) / (dn * (dn - 1.0));
  return (dn * dn - dn * dn * f + dn * f + dn - 2.0) /
         (dn * dn * (dn * dn - 1.0));
}

double negativity(const DensityMatrix& rho) {
  return (trace_norm(partial_transpose_first(rho.matrix(), rho.d())) - 1.0) /
         2.0;
}

double negativity(const PureState& psi) { return negativity(psi.density()); }

GeometricMeasure geometric_measure_pure(const PureState& psi) {
  const double l1 = schmidt_decompose(psi).coefficients.front();
  return {1.0 - l1 * l1, l1 * l1};
}

double concurrence_pure(const PureState& psi) {
  double quartic = 0.0;
  for (double l : schmidt_decompose(psi).coefficients) quartic += l * l * l * l;
  return std::sqrt(std::max(0.0, 2.0 * (1.0 - quartic)));
}

double concurrence_lower_bound(double fef, std::size_t d) {
  RequireFefRange(fef, d, "concurrence_lower_bound");
  const double dn = static_cast<double>(d);
  return std::max(std::sqrt(2.0 / (dn * (dn - 1.0))) * (dn * fef - 1.0), 0.0);
}

double mixture_upper_bound(std::span<const double> weights,
                           std::span<const PureState> pures) {
  if (weights.size() != pures.size() || pures.empty()) {
    throw std::invalid_argument("mixture_upper_bound: need one weight per state");
  }
  check_probabilities(weights);
  double bound = 0.0;
  for (std::size_t i = 0; i < pures.size(); ++i) {
    if (pures[i].d() != pures.front().d()) {
      throw std::invalid_argument("mixture_upper_bound: dimension mismatch");
    }
    bound += weights[i] * fef_pure(pures[i]);
  }
  return bound;
}

ClosestMes closest_mes_pure(const PureState& psi) {
  const std::size_t d = psi.d();
  ComplexMatrix w = LocalUnitaryProduct(schmidt_decompose(psi));
  ComplexVector amps = vec(w);
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  for (auto& z : amps) z *= scale;
  PureState mes = PureState::normalized(d, std::move(amps));
  const double overlap = std::norm(inner(psi.amplitudes(), mes.amplitudes()));
  return {std::move(mes), std::move(w), overlap};
}

const char* to_string(ConditionStatus status) {
  switch (status) {
    case ConditionStatus::kSatisfied: return "satisfied";
    case ConditionStatus::kViolated: return "violated";
    case ConditionStatus::kIndeterminate: return "indeterminate";
  }
  return "unknown";
}

double phase_aligned_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  const Complex overlap = inner(b.entries(), a.entries());  // tr(b^dag a)
  const Complex phase =
      std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : Complex(1.0, 0.0);
  return max_abs_diff(a, b * phase);
}

DecompositionCheckResult decomposition_equality_check(
    std::span<const double> weights, std::span<const PureState> pures,
    const OptimizerConfig& config) {
  DecompositionCheckResult out;
  out.weighted_pure_sum = mixture_upper_bound(weights, pures);
  out.fef_mixture = fef_maximize(mixture(weights, pures), config).value;
  out.equality_holds =
      std::abs(out.fef_mixture - out.weighted_pure_sum) <= kEqualityTolerance;

  if (pures.size() == 1) {
    out.condition_status = ConditionStatus::kSatisfied;
    return out;
  }
  std::vector<ComplexMatrix> products;
  for (const PureState& psi : pures) {
    const SchmidtDecomposition s = schmidt_decompose(psi);
    if (HasGaugeFreedom(s.coefficients)) {
      out.condition_status = ConditionStatus::kIndeterminate;
      return out;
    }
    products.push_back(LocalUnitaryProduct(s));
  }
  out.condition_status = ConditionStatus::kSatisfied;
  for (std::size_t t = 1; t < products.size(); ++t) {
    if (phase_aligned_distance(products[t], products.front()) > kPhaseTolerance) {
      out.condition_status = ConditionStatus::kViolated;
      break;
    }
  }
  return out;
}

Superposition superpose(std::span<const Complex> coefficients,
                        std::span<const PureState> states) {
  if (coefficients.size() != states.size() || states.empty()) {
    throw std::invalid_argument("superpose: need one coefficient per state");
  }
  const std::size_t d = states.front().d();
  ComplexVector sum(d * d);
  double scale = 0.0;
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (states[i].d() != d) {
      throw std::invalid_argument("superpose: dimension mismatch");
    }
    const auto amps = states[i].amplitudes();
    for (std::size_t j = 0; j < sum.size(); ++j) sum[j] += coefficients[i] * amps[j];
    scale += std::abs(coefficients[i]);
  }
  const double gamma = norm(sum);
  if (!(gamma > 1e-12 * scale) || gamma == 0.0) {
    throw std::invalid_argument("superpose: superposition vector is zero");
  }
  return {PureState::normalized(d, std::move(sum)), gamma};
}

SuperpositionBounds superposition_bounds(std::span<const Complex> coefficients,
                                         std::span<const PureState> states) {
  // Validates dimensions and rejects the zero vector.
  const Superposition psi = superpose(coefficients, states);
  const std::size_t d = psi.state.d();

  std::vector<double> terms(states.size());
  for (std::size_t i = 0; i < states.size(); ++i) {
    terms[i] = std::abs(coefficients[i]) * std::sqrt(fef_pure(states[i]));
  }
  const double total = Sum(terms);
  double lower = -std::numeric_limits<double>::infinity();
  for (double t : terms) lower = std::max(lower, t - (total - t));

  SuperpositionBounds b;
  b.lower_uncapped = std::max(lower, 0.0);
  b.upper_uncapped = total;
  b.lower = std::max(lower, 1.0 / static_cast<double>(d * d));
  b.upper = std::min(total, 1.0);
  return b;
}

SuperpositionBounds superposition_bounds(Complex alpha, Complex beta,
                                         const PureState& phi1,
                                         const PureState& phi2) {
  const Complex coefficients[] = {alpha, beta};
  const PureState states[] = {phi1, phi2};
  return superposition_bounds(coefficients, states);
}

Teleportation teleportation_fidelity(double fef, std::size_t d) {
  RequireFefRange(fef, d, "teleportation_fidelity");
  const double dn = static_cast<double>(d);
  return {(fef * dn + 1.0) / (dn + 1.0), fef > 1.0 / dn};
}

FefRange fef_range_bounds(const DensityMatrix& rho) {
  return {1.0 / static_cast<double>(rho.d() * rho.d()), 1.0};
}

}  // namespace fefkit
