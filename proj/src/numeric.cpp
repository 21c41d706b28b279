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

#include "fefkit/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "fefkit/kernels/kernels.hpp"
#include "fefkit/linalg.hpp"

namespace fefkit {
namespace {

constexpr double kUnitaryTolerance = 1e-8;
constexpr double kDegenerateStep = 1e-14;
constexpr double kTieTolerance = 1e-12;

// Unchecked objective on a vectorized unitary; `scratch` receives rho * u.
double QuadraticForm(const ComplexMatrix& rho, const Complex* u, std::size_t d,
                     Complex* scratch) {
  const auto& k = kernels::active_kernels();
  const std::size_t n = d * d;
  k.gemv(rho.data(), n, n, u, scratch);
  return k.dotc(u, scratch, n).real() / static_cast<double>(d);
}

void RequireUnitary(const DensityMatrix& rho, const ComplexMatrix& u,
                    const char* what) {
  if (u.rows() != rho.d() || u.cols() != rho.d()) {
    throw std::invalid_argument(std::string(what) + ": unitary must be " +
                                std::to_string(rho.d()) + "x" +
                                std::to_string(rho.d()));
  }
  const double err = unitarity_error(u);
  if (!(err <= kUnitaryTolerance)) {
    throw std::invalid_argument(std::string(what) +
                                ": matrix is not unitary (max |U^dag U - I| = " +
                                std::to_string(err) + ")");
  }
}

}  // namespace

void OptimizerConfig::validate() const {
  if (max_iterations <= 0) {
    throw std::invalid_argument("optimizer: max_iterations must be positive");
  }
  if (restarts <= 0) {
    throw std::invalid_argument("optimizer: restarts must be positive");
  }
  if (!(tolerance > 0.0 && tolerance < 1.0)) {
    throw std::invalid_argument("optimizer: tolerance must lie in (0, 1)");
  }
}

double fef_objective(const DensityMatrix& rho, const ComplexMatrix& u) {
  RequireUnitary(rho, u, "fef_objective");
  ComplexVector scratch(rho.d() * rho.d());
  return QuadraticForm(rho.matrix(), u.data(), rho.d(), scratch.data());
}

ComplexMatrix fef_euclidean_gradient(const DensityMatrix& rho,
                                     const ComplexMatrix& u) {
  RequireUnitary(rho, u, "fef_euclidean_gradient");
  ComplexMatrix g = unvec(matvec(rho.matrix(), u.entries()));
  g *= 1.0 / static_cast<double>(rho.d());
  return g;
}

std::vector<ComplexMatrix> deterministic_starts(std::size_t d) {
  if (d < 2) throw std::invalid_argument("deterministic_starts: d must be >= 2");
  std::vector<ComplexMatrix> starts;
  starts.push_back(ComplexMatrix::identity(d));

  ComplexMatrix shift(d, d);
  for (std::size_t i = 0; i < d; ++i) shift((i + 1) % d, i) = 1.0;
  starts.push_back(std::move(shift));

  ComplexVector roots(d);
  for (std::size_t k = 0; k < d; ++k) {
    const double t = 2.0 * std::numbers::pi * static_cast<double>(k) /
                     static_cast<double>(d);
    roots[k] = Complex(std::cos(t), std::sin(t));
  }
  starts.push_back(ComplexMatrix::diagonal(std::span<const Complex>(roots)));

  // Real antisymmetric block: U U* = -I on its support.
  const ComplexMatrix a = ComplexMatrix::from_rows({{0.0, 1.0}, {-1.0, 0.0}});
  ComplexMatrix block = kron(a, ComplexMatrix::identity(d / 2));
  if (d % 2 == 0) {
    starts.push_back(std::move(block));
  } else {
    ComplexMatrix padded(d, d);
    for (std::size_t r = 0; r + 1 < d; ++r) {
      for (std::size_t c = 0; c + 1 < d; ++c) padded(r, c) = block(r, c);
    }
    padded(d - 1, d - 1) = 1.0;
    starts.push_back(std::move(padded));
  }
  return starts;
}

AscentRun polar_ascent(const DensityMatrix& rho, ComplexMatrix start,
                       const OptimizerConfig& config, Rng& rng,
                       std::vector<double>* trace) {
  config.validate();
  RequireUnitary(rho, start, "polar_ascent");
  const std::size_t d = rho.d();
  const ComplexMatrix& m = rho.matrix();
  ComplexMatrix step(d, d);

  AscentRun run;
  run.unitary = std::move(start);
  run.value = QuadraticForm(m, run.unitary.data(), d, step.data());
  if (trace != nullptr) trace->push_back(run.value);

  for (long it = 0; it < config.max_iterations; ++it) {
    ++run.iterations;
    // `step` holds rho * vec(U) from the last evaluation.
    if (max_norm(step) < kDegenerateStep) {
      ++run.reseeds;
      run.unitary = random_unitary(d, rng);
      run.value = QuadraticForm(m, run.unitary.data(), d, step.data());
      if (trace != nullptr) trace->push_back(run.value);
      continue;
    }
    ComplexMatrix next = polar_unitary(step).unitary;
    const double value = QuadraticForm(m, next.data(), d, step.data());
    const double improvement = value - run.value;
    run.unitary = std::move(next);
    run.value = value;
    if (trace != nullptr) trace->push_back(value);
    if (improvement < config.tolerance) return run;
  }
  run.hit_iteration_cap = true;
  return run;
}

FefResult fef_maximize(const DensityMatrix& rho, const OptimizerConfig& config) {
  config.validate();
  const std::size_t d = rho.d();
  const std::vector<ComplexMatrix> fixed = deterministic_starts(d);

  FefResult result;
  result.spectral_bound = hermitian_eig(rho.matrix()).values.front();
  bool have_best = false;
  bool any_converged = false;

  for (int r = 0; r < config.restarts; ++r) {
    Rng rng = Rng::stream(config.seed, static_cast<std::uint64_t>(r));
    ComplexMatrix start = static_cast<std::size_t>(r) < fixed.size()
                              ? fixed[static_cast<std::size_t>(r)]
                              : random_unitary(d, rng);
    AscentRun run = polar_ascent(rho, std::move(start), config, rng);
    result.iterations_total += run.iterations;
    result.restarts_used += 1 + run.reseeds;
    any_converged = any_converged || !run.hit_iteration_cap;
    if (!have_best || run.value > result.value + kTieTolerance) {
      have_best = true;
      result.value = run.value;
      result.optimal_unitary = std::move(run.unitary);
    }
  }
  result.converged = any_converged;
  result.value = fef_objective(rho, result.optimal_unitary);
  return result;
}

double fef_oracle_grid_d2(const DensityMatrix& rho, int resolution) {
  if (rho.d() != 2) throw std::invalid_argument("fef_oracle_grid_d2: requires d = 2");
  if (resolution < 2) {
    throw std::invalid_argument("fef_oracle_grid_d2: resolution must be >= 2");
  }
  const ComplexMatrix& m = rho.matrix();
  const auto res = static_cast<std::size_t>(resolution);

  std::vector<Complex> phases(res);
  for (std::size_t j = 0; j < res; ++j) {
    const double t = 2.0 * std::numbers::pi * static_cast<double>(j) /
                     static_cast<double>(res);
    phases[j] = Complex(std::cos(t), std::sin(t));
  }

  Complex u[4];
  Complex scratch[4];
  Complex best_u[4] = {1.0, 0.0, 0.0, 1.0};
  double best = -1.0;
  for (std::size_t i = 0; i < res; ++i) {
    const double theta = 0.5 * std::numbers::pi * static_cast<double>(i) /
                         static_cast<double>(res - 1);
    const double c = std::cos(theta), s = std::sin(theta);
    for (std::size_t ja = 0; ja < res; ++ja) {
      for (std::size_t jb = 0; jb < res; ++jb) {
        // [[c e^{ia}, s e^{ib}], [-s e^{-ib}, c e^{-ia}]]
        u[0] = c * phases[ja];
        u[1] = s * phases[jb];
        u[2] = -s * std::conj(phases[jb]);
        u[3] = c * std::conj(phases[ja]);
        const double v = QuadraticForm(m, u, 2, scratch);
        if (v > best) {
          best = v;
          std::copy(u, u + 4, best_u);
        }
      }
    }
  }

  Rng rng(0);
  const ComplexMatrix start(2, 2, ComplexVector(best_u, best_u + 4));
  const AscentRun polished = polar_ascent(rho, start, OptimizerConfig{}, rng);
  return std::max(best, polished.value);
}

}  // namespace fefkit
