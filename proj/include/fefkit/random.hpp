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
#include <random>

#include "fefkit/complex_matrix.hpp"

namespace fefkit {

/// Seedable, reproducible generator: mt19937_64 for uniforms, Box-Muller for
/// Gaussians. Bit-identical across platforms for a given seed (no reliance on
/// the unspecified std:: distributions).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Independent stream keyed by (base_seed, index).
  static Rng stream(std::uint64_t base_seed, std::uint64_t index);

  std::uint64_t next_u64() { return engine_(); }
  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  /// Standard normal.
  double normal();
  /// Independent standard normal real and imaginary parts.
  Complex complex_normal();
  /// Uniform integer in [0, n).
  std::size_t below(std::size_t n);

 private:
  std::mt19937_64 engine_;
  std::optional<double> spare_;
};

/// SplitMix64 finalizer.
std::uint64_t mix_seed(std::uint64_t x);

/// Haar-distributed d x d unitary (Gram-Schmidt on a Ginibre matrix).
ComplexMatrix random_unitary(std::size_t d, Rng& rng);

}  // namespace fefkit
