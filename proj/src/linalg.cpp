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

#include "fefkit/linalg.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace fefkit {
namespace {

using EigenMatrix =
    Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using ConstEigenMap = Eigen::Map<const EigenMatrix>;

ComplexMatrix FromEigen(const Eigen::MatrixXcd& m) {
  ComplexMatrix out(static_cast<std::size_t>(m.rows()),
                    static_cast<std::size_t>(m.cols()));
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      out(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = m(r, c);
    }
  }
  return out;
}

ConstEigenMap AsEigen(const ComplexMatrix& m) {
  return ConstEigenMap(m.data(), static_cast<Eigen::Index>(m.rows()),
                       static_cast<Eigen::Index>(m.cols()));
}

}  // namespace

NotHermitianError::NotHermitianError(double deviation, std::size_t row,
                                     std::size_t col)
    : std::invalid_argument("matrix is not Hermitian: |h(" +
                            std::to_string(row) + "," + std::to_string(col) +
                            ") - conj(h(" + std::to_string(col) + "," +
                            std::to_string(row) +
                            "))| = " + std::to_string(deviation)),
      deviation_(deviation),
      row_(row),
      col_(col) {}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  constexpr std::size_t kMax = std::numeric_limits<std::size_t>::max();
  const auto overflows = [](std::size_t x, std::size_t y) {
    return x != 0 && y > kMax / x;
  };
  if (overflows(a.rows(), b.rows()) || overflows(a.cols(), b.cols()) ||
      overflows(a.rows() * b.rows(), a.cols() * b.cols()) ||
      overflows(a.rows() * b.rows() * a.cols() * b.cols(), sizeof(Complex))) {
    throw std::length_error("kron: result dimensions overflow");
  }
  const std::size_t rb = b.rows(), cb = b.cols();
  ComplexMatrix out(a.rows() * rb, a.cols() * cb);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex aij = a(i, j);
      if (aij == Complex(0.0, 0.0)) continue;
      for (std::size_t k = 0; k < rb; ++k) {
        Complex* dst = &out(i * rb + k, j * cb);
        const Complex* src = b.data() + k * cb;
        for (std::size_t l = 0; l < cb; ++l) dst[l] = aij * src[l];
      }
    }
  }
  return out;
}

HermiticityDefect hermiticity_defect(const ComplexMatrix& h) {
  if (!h.is_square()) {
    throw std::invalid_argument("hermiticity_defect: matrix not square");
  }
  HermiticityDefect defect;
  for (std::size_t r = 0; r < h.rows(); ++r) {
    for (std::size_t c = r; c < h.cols(); ++c) {
      const double dev = std::abs(h(r, c) - std::conj(h(c, r)));
      if (dev > defect.deviation) defect = {dev, r, c};
    }
  }
  return defect;
}

ComplexMatrix hermitian_part(const ComplexMatrix& h) {
  ComplexMatrix out = h + h.adjoint();
  out *= 0.5;
  return out;
}

HermitianEigen hermitian_eig(const ComplexMatrix& h) {
  if (!h.is_square()) {
    throw std::invalid_argument("hermitian_eig: matrix not square");
  }
  const HermiticityDefect defect = hermiticity_defect(h);
  if (!(defect.deviation <= kHermitianTolerance)) {
    throw NotHermitianError(defect.deviation, defect.row, defect.col);
  }
  const ComplexMatrix sym = hermitian_part(h);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
      Eigen::MatrixXcd(AsEigen(sym)));
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("hermitian_eig: eigensolver did not converge");
  }
  const auto& values = solver.eigenvalues();
  const auto& vectors = solver.eigenvectors();
  const std::size_t n = h.rows();

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return values(static_cast<Eigen::Index>(x)) >
           values(static_cast<Eigen::Index>(y));
  });

  HermitianEigen out{std::vector<double>(n), ComplexMatrix(n, n)};
  for (std::size_t i = 0; i < n; ++i) {
    const auto src = static_cast<Eigen::Index>(order[i]);
    out.values[i] = values(src);
    for (std::size_t r = 0; r < n; ++r) {
      out.vectors(r, i) = vectors(static_cast<Eigen::Index>(r), src);
    }
  }
  return out;
}

SingularValueDecomposition svd(const ComplexMatrix& m) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> solver(
      Eigen::MatrixXcd(AsEigen(m)), Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto& sv = solver.singularValues();
  SingularValueDecomposition out;
  out.left = FromEigen(solver.matrixU());
  out.right = FromEigen(solver.matrixV());
  out.singular_values.assign(sv.data(), sv.data() + sv.size());
  return out;
}

PolarFactor polar_unitary(const ComplexMatrix& m) {
  if (!m.is_square()) {
    throw std::invalid_argument("polar_unitary: matrix not square");
  }
  const SingularValueDecomposition f = svd(m);
  PolarFactor out;
  out.unitary = f.left * f.right.adjoint();
  out.min_singular_value =
      f.singular_values.empty() ? 0.0 : f.singular_values.back();
  out.rank_deficient = out.min_singular_value < kRankDeficiencyThreshold;
  return out;
}

double trace_norm(const ComplexMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("trace_norm: matrix not square");
  const auto sv = svd(m).singular_values;
  return std::accumulate(sv.begin(), sv.end(), 0.0);
}

ComplexMatrix partial_transpose_first(const ComplexMatrix& rho, std::size_t d) {
  if (d == 0 || !rho.is_square() || rho.rows() != d * d) {
    throw std::invalid_argument("partial_transpose_first: expected a " +
                                std::to_string(d * d) + "x" +
                                std::to_string(d * d) + " matrix");
  }
  ComplexMatrix out(rho.rows(), rho.cols());
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t k = 0; k < d; ++k) {
      for (std::size_t b = 0; b < d; ++b) {
        for (std::size_t l = 0; l < d; ++l) {
          out(a * d + k, b * d + l) = rho(b * d + k, a * d + l);
        }
      }
    }
  }
  return out;
}

ComplexVector vec(const ComplexMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("vec: matrix not square");
  return ComplexVector(m.entries().begin(), m.entries().end());
}

std::size_t exact_sqrt(std::size_t n) {
  auto r = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(n))));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r * r == n ? r : 0;
}

ComplexMatrix unvec(std::span<const Complex> x) {
  const std::size_t d = exact_sqrt(x.size());
  if (d == 0) {
    throw std::invalid_argument("unvec: length " + std::to_string(x.size()) +
                                " is not a positive perfect square");
  }
  return ComplexMatrix(d, d, ComplexVector(x.begin(), x.end()));
}

double unitarity_error(const ComplexMatrix& u) {
  if (!u.is_square()) return std::numeric_limits<double>::infinity();
  return max_abs_diff(u.adjoint() * u, ComplexMatrix::identity(u.rows()));
}

}  // namespace fefkit
