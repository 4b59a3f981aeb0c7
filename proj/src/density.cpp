// Copyright 2026 The entroportrait authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "entroportrait/density.hpp"

#include <algorithm>
#include <cmath>

#include "entroportrait/kernels.hpp"
#include "entroportrait/rng.hpp"

namespace entroportrait {

namespace {
constexpr double kHermTol = 1e-10;
constexpr double kTraceTol = 1e-9;
constexpr double kEigTol = 1e-9;
} // namespace

DensityMatrix::DensityMatrix(const ComplexMatrix &m) {
  if (!m.is_square())
    throw Error(ErrorCode::not_square, "density matrix must be square");
  const std::size_t n = m.rows();

  double herm_err = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      herm_err = std::max(herm_err, std::abs(m(i, j) - std::conj(m(j, i))));
  if (herm_err > kHermTol)
    throw Error(ErrorCode::not_hermitian,
                "density matrix not Hermitian: ||rho - rho+||_max = " +
                    std::to_string(herm_err));

  ComplexMatrix sym(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      sym(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));

  const double trace = sym.trace().real();
  if (std::abs(trace - 1.0) > kTraceTol)
    throw Error(ErrorCode::trace_not_one,
                "density matrix trace is " + std::to_string(trace));

  HermitianEig eig = hermitian_eig(sym, kHermTol);
  const double lambda_min = eig.eigenvalues.back();
  if (lambda_min < -kEigTol)
    throw Error(ErrorCode::not_positive,
                "density matrix has negative eigenvalue " +
                    std::to_string(lambda_min));

  bool clamped = false;
  for (double &lambda : eig.eigenvalues) {
    if (lambda < 0.0) {
      lambda = 0.0;
      clamped = true;
    }
    lambda = std::min(lambda, 1.0);
  }
  spectrum_ = eig.eigenvalues;

  if (!clamped) {
    matrix_ = std::move(sym);
    return;
  }
  // Rebuild from the clamped spectrum so the stored matrix is exactly PSD.
  const ComplexMatrix &v = eig.eigenvectors.matrix();
  ComplexMatrix scaled(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      scaled(i, j) = v(i, j) * spectrum_[j];
  matrix_ = scaled * v.adjoint();
}

double von_neumann_entropy(const DensityMatrix &rho) {
  const auto &lam = rho.spectrum();
  const double s = kernels::sum(lam.data(), lam.size());
  const double raw = kernels::neg_xlogx_sum(lam.data(), lam.size());
  return raw / s + std::log(s);
}

SpectralDecomposition spectral_decompose(const DensityMatrix &rho) {
  HermitianEig eig = hermitian_eig(rho.matrix(), kHermTol);
  double total = 0.0;
  for (double &lambda : eig.eigenvalues) {
    lambda = std::clamp(lambda, 0.0, 1.0);
    total += lambda;
  }
  for (double &lambda : eig.eigenvalues)
    lambda /= total;
  return SpectralDecomposition{ProbabilityVector(std::move(eig.eigenvalues)),
                               std::move(eig.eigenvectors)};
}

DensityMatrix random_density(std::size_t dim, std::size_t rank,
                             std::uint64_t seed) {
  if (dim < 1)
    throw Error(ErrorCode::invalid_argument, "dimension must be positive");
  if (rank < 1 || rank > dim)
    throw Error(ErrorCode::bad_rank, "rank must lie in 1.." +
                                         std::to_string(dim) + ", got " +
                                         std::to_string(rank));
  Rng rng(seed);
  ComplexMatrix g(dim, rank);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < rank; ++j)
      g(i, j) = rng.complex_gaussian();
  ComplexMatrix gg = g * g.adjoint();
  const double trace = gg.trace().real();
  return DensityMatrix(gg * (1.0 / trace));
}

UnitaryMatrix random_unitary(std::size_t dim, std::uint64_t seed) {
  if (dim < 1)
    throw Error(ErrorCode::invalid_argument, "dimension must be positive");
  Rng rng(seed);
  ComplexMatrix g(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      g(i, j) = rng.complex_gaussian();

  // Modified Gram–Schmidt on columns, run twice so the basis is orthonormal
  // to machine precision even for unlucky draws.
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t c = 0; c < dim; ++c) {
      for (std::size_t prev = 0; prev < c; ++prev) {
        Complex proj = 0.0;
        for (std::size_t r = 0; r < dim; ++r)
          proj += std::conj(g(r, prev)) * g(r, c);
        for (std::size_t r = 0; r < dim; ++r)
          g(r, c) -= proj * g(r, prev);
      }
      double norm_sq = 0.0;
      for (std::size_t r = 0; r < dim; ++r)
        norm_sq += std::norm(g(r, c));
      const double inv = 1.0 / std::sqrt(norm_sq);
      for (std::size_t r = 0; r < dim; ++r)
        g(r, c) *= inv;
    }
  }
  return UnitaryMatrix(std::move(g));
}

} // namespace entroportrait
