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

// Numerical fully entangled fraction: maximization of
//   F(rho) = max_U <psi+| (U^dagger (x) I) rho (U (x) I) |psi+>
// over d x d unitaries. With u = vec(U) (row-major), the objective is the
// positive semidefinite quadratic form (1/d) u^dagger rho u restricted to
// vectorized unitaries.
//
// The maximizer is a polar fixed-point iteration: U <- polar(unvec(rho u)).
// Since U_next maximizes Re <U', rho u> over unitaries and rho >= 0, each step
// cannot decrease the objective. Restarts cover the non-concave landscape.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "fefkit/complex_matrix.hpp"
#include "fefkit/random.hpp"
#include "fefkit/states.hpp"

namespace fefkit {

struct OptimizerConfig {
  int max_iterations = 10000;  // per restart
  double tolerance = 1e-12;    // absolute improvement stopping threshold
  int restarts = 20;
  std::uint64_t seed = 0;

  /// Throws std::invalid_argument on non-positive fields or tolerance >= 1.
  void validate() const;
};

struct FefResult {
  double value = 0.0;
  ComplexMatrix optimal_unitary;
  long iterations_total = 0;
  int restarts_used = 0;
  bool converged = false;
  double spectral_bound = 0.0;  // largest eigenvalue of rho
};

/// (1/d) vec(u)^dagger rho vec(u). Throws if u is not a d x d unitary within
/// 1e-8.
double fef_objective(const DensityMatrix& rho, const ComplexMatrix& u);

/// G = (1/d) unvec(rho vec(U)); the directional derivative of the objective
/// along D is 2 Re <vec(D), vec(G)>.
ComplexMatrix fef_euclidean_gradient(const DensityMatrix& rho,
                                     const ComplexMatrix& u);

/// Structured starting points: identity, cyclic shift, diagonal of d-th roots
/// of unity, and the antisymmetric block [[0,1],[-1,0]] (x) I (even d) or that
/// block direct-summed with [1] (odd d).
std::vector<ComplexMatrix> deterministic_starts(std::size_t d);

/// One restart of the polar fixed-point iteration.
struct AscentRun {
  ComplexMatrix unitary;
  double value = 0.0;
  long iterations = 0;
  bool hit_iteration_cap = false;
  int reseeds = 0;  // random restarts forced by a vanishing rho vec(U)
};

/// Runs from `start`; appends every objective value to `trace` if given.
/// `rng` supplies replacement starts after degenerate steps.
AscentRun polar_ascent(const DensityMatrix& rho, ComplexMatrix start,
                       const OptimizerConfig& config, Rng& rng,
                       std::vector<double>* trace = nullptr);

/// Best of `config.restarts` ascents: deterministic starts first, then Haar
/// random unitaries from Rng::stream(config.seed, restart_index).
FefResult fef_maximize(const DensityMatrix& rho,
                       const OptimizerConfig& config = {});

/// Exhaustive d = 2 oracle: resolution^3 grid over SU(2) parameterized by
/// (theta, alpha, beta) in [0, pi/2] x [0, 2 pi)^2, best point polished by
/// polar_ascent.
double fef_oracle_grid_d2(const DensityMatrix& rho, int resolution);

}  // namespace fefkit
