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
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "fefkit/numeric.hpp"
#include "fefkit/states.hpp"

namespace fefkit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitPropertyFailure = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitNoClosedForm = 3;

enum class Family { kIsotropic, kWerner };
const char* to_string(Family family);

struct FamilyMatch {
  Family family;
  double f = 0.0;
  double residual = 0.0;  // max-norm distance to the fitted family member
};

/// Least-squares projection of rho onto each one-parameter family, accepted
/// when f is in range and the residual is at most `tolerance`. Isotropic is
/// tried first (I/d^2 belongs to both families).
std::optional<FamilyMatch> detect_family(const DensityMatrix& rho,
                                         double tolerance = 1e-8);

struct ComputeOptions {
  std::string input;
  std::string method = "both";  // exact | numeric | both
  int restarts = 20;
  double tol = 1e-12;
  std::uint64_t seed = 0;
  bool emit_unitary = false;
};
int cmd_compute(const ComputeOptions& opts, std::ostream& out,
                std::ostream& err);

struct FamilyOptions {
  std::string family;  // isotropic | werner
  std::size_t d = 2;
  double f_min = 0.0;
  double f_max = 1.0;
  int steps = 11;
  std::string output = "-";  // "-" writes to `out`
  std::uint64_t seed = 0;
  int restarts = 20;
  double tol = 1e-12;
};
int cmd_family(const FamilyOptions& opts, std::ostream& out, std::ostream& err);

struct VerifyOptions {
  std::string suite = "all";  // bounds | relations | mixtures | superposition | all
  std::size_t d = 2;
  int samples = 100;
  std::uint64_t seed = 0;
};
int cmd_verify(const VerifyOptions& opts, std::ostream& out, std::ostream& err);

struct RandomOptions {
  std::string kind;  // pure | density
  std::size_t d = 2;
  std::size_t rank = 1;
  std::uint64_t seed = 0;
  std::string output = "-";
};
int cmd_random(const RandomOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace fefkit::cli
