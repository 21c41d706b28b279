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

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "fefkit/exact.hpp"
#include "fefkit/linalg.hpp"
#include "test_util.hpp"

namespace fefkit {
namespace {

using testing::ApplyLocal;
using testing::TwoTermState;

double ExpectationPsiPlus(const DensityMatrix& rho) {
  const auto psi = max_entangled(rho.d());
  return inner(psi.amplitudes(), matvec(rho.matrix(), psi.amplitudes())).real();
}

TEST(MaxEntangled, Amplitudes) {
  const PureState two = max_entangled(2);
  const double h = 1.0 / std::sqrt(2.0);
  EXPECT_EQ(two.amplitudes()[0], Complex(h));
  EXPECT_EQ(two.amplitudes()[3], Complex(h));
  EXPECT_EQ(two.amplitudes()[1], Complex(0.0));

  const PureState three = max_entangled(3);
  EXPECT_NEAR(norm(three.amplitudes()), 1.0, 1e-15);
  EXPECT_EQ(std::count_if(three.amplitudes().begin(), three.amplitudes().end(),
                          [](Complex z) { return z != Complex(0.0); }),
            3);
  EXPECT_NEAR(fef_pure(three), 1.0, 1e-14);
  EXPECT_THROW(max_entangled(1), std::invalid_argument);
}

TEST(PureState, RejectsBadAmplitudes) {
  try {
    PureState::from_amplitudes(2, {1.0, 1.0, 0.0, 0.0});
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.kind(), ValidationFailure::kNotNormalized);
  }
  try {
    PureState::from_amplitudes(2, {1.0, 0.0, 0.0});
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.kind(), ValidationFailure::kWrongSize);
  }
  EXPECT_THROW(PureState::normalized(2, ComplexVector(4)), ValidationError);
}

TEST(Schmidt, ProductState) {
  const SchmidtDecomposition s = schmidt_decompose(basis_state(2, 0, 0));
  EXPECT_NEAR(s.coefficients[0], 1.0, 1e-15);
  EXPECT_NEAR(s.coefficients[1], 0.0, 1e-15);
}

TEST(Schmidt, BellState) {
  const SchmidtDecomposition s = schmidt_decompose(max_entangled(2));
  EXPECT_NEAR(s.coefficients[0], 1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(s.coefficients[1], 1.0 / std::sqrt(2.0), 1e-15);
}

TEST(Schmidt, UnequalTwoTermState) {
  // SVD of diag(sqrt 0.8, sqrt 0.2).
  const SchmidtDecomposition s = schmidt_decompose(TwoTermState(0.8, 0.2));
  EXPECT_NEAR(s.coefficients[0], std::sqrt(0.8), 1e-15);
  EXPECT_NEAR(s.coefficients[1], std::sqrt(0.2), 1e-15);
}

TEST(Schmidt, ReconstructsHaarStates) {
  Rng rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t d = 2 + trial % 3;
    const PureState psi = random_pure(d, rng);
    const SchmidtDecomposition s = schmidt_decompose(psi);
    ASSERT_EQ(s.coefficients.size(), d);
    EXPECT_TRUE(std::is_sorted(s.coefficients.rbegin(), s.coefficients.rend()));
    double sq = 0.0;
    for (double l : s.coefficients) {
      EXPECT_GE(l, 0.0);
      sq += l * l;
    }
    EXPECT_NEAR(sq, 1.0, 1e-9);

    const ComplexVector rotated = ApplyLocal(s.u1, s.u2, psi.amplitudes());
    ComplexVector target(d * d);
    for (std::size_t j = 0; j < d; ++j) target[j * d + j] = s.coefficients[j];
    double err = 0.0;
    for (std::size_t i = 0; i < target.size(); ++i) err += std::norm(rotated[i] - target[i]);
    EXPECT_LE(std::sqrt(err), 1e-8);
  }
}

TEST(Isotropic, SpecialPoints) {
  for (std::size_t d : {2u, 3u}) {
    const double dd = static_cast<double>(d * d);
    ComplexMatrix mixed = ComplexMatrix::identity(d * d) * (1.0 / dd);
    EXPECT_LE(max_abs_diff(isotropic(d, 1.0 / dd).matrix(), mixed), 1e-15);
    EXPECT_LE(max_abs_diff(isotropic(d, 1.0).matrix(), max_entangled(d).projector()), 1e-15);
  }
  EXPECT_NEAR(ExpectationPsiPlus(isotropic(2, 0.7)), 0.7, 1e-12);
}

TEST(Isotropic, RejectsOutOfRange) {
  EXPECT_THROW(isotropic(2, -0.01), std::domain_error);
  EXPECT_THROW(isotropic(2, 1.01), std::domain_error);
  EXPECT_THROW(isotropic(2, std::nan("")), std::domain_error);
}

TEST(Isotropic, InvariantUnderUTimesUConjugate) {
  Rng rng(41);
  for (std::size_t d : {2u, 3u}) {
    for (double f : {0.0, 0.3, 0.9}) {
      const ComplexMatrix rho = isotropic(d, f).matrix();
      for (int k = 0; k < 20; ++k) {
        const ComplexMatrix u = random_unitary(d, rng);
        const ComplexMatrix w = kron(u, u.conjugate());
        EXPECT_LE(max_abs_diff(w * rho * w.adjoint(), rho), 1e-9);
      }
    }
  }
}

TEST(Werner, SingletAtMinusOne) {
  // (d - f)/(d^3 - d) = 1/2 and (d f - 1)/(d^3 - d) = -1/2 at d = 2, f = -1.
  ComplexMatrix singlet = ComplexMatrix::identity(4) - swap_operator(2);
  singlet *= 0.5;
  EXPECT_LE(max_abs_diff(werner(2, -1.0).matrix(), singlet), 1e-15);
}

TEST(Werner, MaximallyMixedAtOneOverD) {
  for (std::size_t d : {2u, 3u, 4u}) {
    const double dd = static_cast<double>(d * d);
    EXPECT_LE(max_abs_diff(werner(d, 1.0 / static_cast<double>(d)).matrix(),
                           ComplexMatrix::identity(d * d) * (1.0 / dd)),
              1e-15);
  }
}

TEST(Werner, ParameterIsSwapExpectation) {
  // f = tr(rho V); the singlet-fraction <psi+|rho|psi+> is (1 + f)/(d(d+1)).
  for (std::size_t d : {2u, 3u, 5u}) {
    const double dn = static_cast<double>(d);
    for (double f : {-1.0, -0.3, 0.0, 0.5, 1.0}) {
      const DensityMatrix rho = werner(d, f);
      EXPECT_NEAR((rho.matrix() * swap_operator(d)).trace().real(), f, 1e-12);
      EXPECT_NEAR(ExpectationPsiPlus(rho), (1.0 + f) / (dn * (dn + 1.0)), 1e-12);
    }
  }
  EXPECT_NEAR(ExpectationPsiPlus(werner(3, 0.5)), 0.125, 1e-12);
}

TEST(Werner, PositiveOnWholeRange) {
  for (std::size_t d = 2; d <= 6; ++d) {
    for (int i = 0; i <= 40; ++i) {
      const double f = -1.0 + 0.05 * i;
      const auto values = hermitian_eig(werner(d, f).matrix()).values;
      EXPECT_GE(values.back(), -1e-15) << "d=" << d << " f=" << f;
    }
  }
  EXPECT_THROW(werner(3, -1.0001), std::domain_error);
  EXPECT_THROW(werner(3, 1.0001), std::domain_error);
}

TEST(Werner, InvariantUnderUTimesU) {
  Rng rng(43);
  for (std::size_t d : {2u, 3u}) {
    for (double f : {-1.0, 0.2, 1.0}) {
      const ComplexMatrix rho = werner(d, f).matrix();
      for (int k = 0; k < 20; ++k) {
        const ComplexMatrix u = random_unitary(d, rng);
        const ComplexMatrix w = kron(u, u);
        EXPECT_LE(max_abs_diff(w * rho * w.adjoint(), rho), 1e-9);
      }
    }
  }
}

TEST(PermutationMixture, CounterExampleState) {
  const std::vector<std::size_t> id{0, 1};
  const std::vector<double> half{0.5, 0.5};
  const DensityMatrix rho = permutation_mixture(2, id, half);
  const std::vector<double> diag{0.5, 0.0, 0.0, 0.5};
  EXPECT_EQ(rho.matrix(), ComplexMatrix::diagonal(std::span<const double>(diag)));

  const std::vector<double> first{1.0, 0.0};
  EXPECT_EQ(permutation_mixture(2, id, first).matrix(), basis_state(2, 0, 0).projector());
}

TEST(PermutationMixture, DiagonalWithRankEqualToSupport) {
  Rng rng(8);
  for (std::size_t d : {2u, 3u, 4u}) {
    std::vector<std::size_t> sigma(d);
    std::iota(sigma.begin(), sigma.end(), 0);
    std::reverse(sigma.begin(), sigma.end());
    std::vector<double> p(d);
    for (auto& x : p) x = rng.uniform() < 0.3 ? 0.0 : rng.uniform();
    p[0] += 0.1;
    const double total = std::accumulate(p.begin(), p.end(), 0.0);
    for (auto& x : p) x /= total;
    const ComplexMatrix rho = permutation_mixture(d, sigma, p).matrix();
    std::size_t nonzero = 0;
    for (std::size_t r = 0; r < rho.rows(); ++r) {
      for (std::size_t c = 0; c < rho.cols(); ++c) {
        if (r != c) EXPECT_EQ(rho(r, c), Complex(0.0));
      }
      if (rho(r, r).real() > 0.0) ++nonzero;
    }
    EXPECT_EQ(nonzero, static_cast<std::size_t>(
                           std::count_if(p.begin(), p.end(), [](double x) { return x > 0; })));
  }
}

TEST(PermutationMixture, RejectsInvalidInput) {
  const std::vector<double> half{0.5, 0.5};
  const std::vector<std::size_t> repeated{0, 0};
  EXPECT_THROW(permutation_mixture(2, repeated, half), std::invalid_argument);
  const std::vector<std::size_t> id{0, 1};
  const std::vector<double> bad{0.7, 0.7};
  EXPECT_THROW(permutation_mixture(2, id, bad), std::invalid_argument);
  const std::vector<double> negative{1.5, -0.5};
  EXPECT_THROW(permutation_mixture(2, id, negative), std::invalid_argument);
}

TEST(RandomPure, NormalizedAndDeterministic) {
  const PureState a = random_pure(3, std::uint64_t{123});
  const PureState b = random_pure(3, std::uint64_t{123});
  EXPECT_NEAR(norm(a.amplitudes()), 1.0, 1e-12);
  EXPECT_TRUE(std::equal(a.amplitudes().begin(), a.amplitudes().end(),
                         b.amplitudes().begin()));
}

// For Haar states on 2 x 2 the largest squared Schmidt coefficient x has
// density proportional to (2x - 1)^2 on [1/2, 1], so E[x] = 7/8.
TEST(RandomPure, HaarMeanOfLargestSchmidtWeight) {
  Rng rng(2024);
  double sum = 0.0;
  const int n = 1000;
  for (int i = 0; i < n; ++i) {
    const double l1 = schmidt_decompose(random_pure(2, rng)).coefficients[0];
    sum += l1 * l1;
  }
  EXPECT_NEAR(sum / n, 7.0 / 8.0, 0.02);
}

TEST(RandomDensity, RankAndTrace) {
  Rng rng(9);
  for (std::size_t d : {2u, 3u}) {
    for (std::size_t rank = 1; rank <= d * d; rank += 2) {
      const DensityMatrix rho = random_density(d, rank, rng);
      EXPECT_NEAR(rho.matrix().trace().real(), 1.0, 1e-12);
      const auto values = hermitian_eig(rho.matrix()).values;
      EXPECT_EQ(std::count_if(values.begin(), values.end(), [](double v) { return v > 1e-9; }),
                static_cast<long>(rank));
    }
  }
  const DensityMatrix pure = random_density(2, 1, std::uint64_t{5});
  EXPECT_NEAR((pure.matrix() * pure.matrix()).trace().real(), 1.0, 1e-12);
  EXPECT_THROW(random_density(2, 0, std::uint64_t{1}), std::invalid_argument);
  EXPECT_THROW(random_density(2, 5, std::uint64_t{1}), std::invalid_argument);
}

TEST(ValidateDensity, AcceptsMaximallyMixed) {
  EXPECT_NO_THROW(validate_density(ComplexMatrix::identity(4) * 0.25, 2));
}

TEST(ValidateDensity, DistinctFailures) {
  const auto kind_of = [](const ComplexMatrix& m, std::size_t d) {
    try {
      validate_density(m, d);
    } catch (const ValidationError& e) {
      return e.kind();
    }
    ADD_FAILURE() << "accepted invalid matrix";
    return ValidationFailure::kNonFinite;
  };
  EXPECT_EQ(kind_of(ComplexMatrix::identity(2), 2), ValidationFailure::kWrongSize);
  ComplexMatrix skew = ComplexMatrix::identity(4) * 0.25;
  skew(0, 1) = 0.1;
  EXPECT_EQ(kind_of(skew, 2), ValidationFailure::kNotHermitian);
  EXPECT_EQ(kind_of(ComplexMatrix::identity(4) * 0.3, 2), ValidationFailure::kBadTrace);
  ComplexMatrix nan = ComplexMatrix::identity(4) * 0.25;
  nan(2, 2) = std::nan("");
  EXPECT_EQ(kind_of(nan, 2), ValidationFailure::kNonFinite);

  // Spectral synthesis: eigenvalues (0.6, 0.3, 0.2, -0.1) in a random basis.
  Rng rng(77);
  const ComplexMatrix u = random_unitary(4, rng);
  const std::vector<double> spectrum{0.6, 0.3, 0.2, -0.1};
  const ComplexMatrix m =
      u * ComplexMatrix::diagonal(std::span<const double>(spectrum)) * u.adjoint();
  EXPECT_EQ(kind_of(m, 2), ValidationFailure::kNotPositive);
}

TEST(ValidateDensity, SymmetrizesWithinTolerance) {
  ComplexMatrix m = ComplexMatrix::identity(4) * 0.25;
  m(0, 1) = Complex(1e-11, 0.0);
  const DensityMatrix rho = validate_density(m, 2);
  EXPECT_EQ(rho.matrix()(0, 1), rho.matrix()(1, 0));
}

TEST(Rng, StreamsAreDistinctAndReproducible) {
  Rng a = Rng::stream(5, 0), b = Rng::stream(5, 1), c = Rng::stream(5, 0);
  const auto x = a.next_u64();
  EXPECT_NE(x, b.next_u64());
  EXPECT_EQ(x, c.next_u64());
}

TEST(Rng, NormalMoments) {
  Rng rng(1);
  double s = 0.0, s2 = 0.0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double z = rng.normal();
    s += z;
    s2 += z * z;
  }
  EXPECT_NEAR(s / n, 0.0, 0.01);
  EXPECT_NEAR(s2 / n, 1.0, 0.01);
}

TEST(RandomUnitary, IsUnitary) {
  Rng rng(3);
  for (std::size_t d = 1; d <= 6; ++d) {
    EXPECT_LE(unitarity_error(random_unitary(d, rng)), 1e-13);
  }
}

}  // namespace
}  // namespace fefkit
