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

#include "fefkit/random.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fefkit {

std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Rng Rng::stream(std::uint64_t base_seed, std::uint64_t index) {
  return Rng(mix_seed(mix_seed(base_seed) ^ mix_seed(index + 1)));
}

double Rng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
  if (spare_) {
    const double z = *spare_;
    spare_.reset();
    return z;
  }
  const double u1 = 1.0 - uniform();  // (0, 1]
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double t = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(t);
  return r * std::cos(t);
}

Complex Rng::complex_normal() {
  const double re = normal();
  const double im = normal();
  return {re, im};
}

std::size_t Rng::below(std::size_t n) {
  if (n == 0) throw std::invalid_argument("Rng::below: empty range");
  return static_cast<std::size_t>(uniform() * static_cast<double>(n)) % n;
}

ComplexMatrix random_unitary(std::size_t d, Rng& rng) {
  if (d == 0) throw std::invalid_argument("random_unitary: d must be positive");
  // Columns of a Ginibre matrix, orthonormalized in order. Equivalent to QR
  // with a positive-diagonal R, which yields the Haar measure.
  std::vector<ComplexVector> cols(d, ComplexVector(d));
  for (auto& c : cols) {
    for (auto& z : c) z = rng.complex_normal();
  }
  for (std::size_t j = 0; j < d; ++j) {
    // Two passes of modified Gram-Schmidt keep orthogonality at 1e-15.
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t i = 0; i < j; ++i) {
        const Complex proj = inner(cols[i], cols[j]);
        for (std::size_t r = 0; r < d; ++r) cols[j][r] -= proj * cols[i][r];
      }
    }
    const double n = norm(cols[j]);
    for (auto& z : cols[j]) z /= n;
  }
  ComplexMatrix u(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t r = 0; r < d; ++r) u(r, j) = cols[j][r];
  }
  return u;
}

}  // namespace fefkit
