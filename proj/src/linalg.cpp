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

#include "entroportrait/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/Dense>

#include "entroportrait/kernels.hpp"

namespace entroportrait {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols,
                             std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_)
    throw Error(ErrorCode::invalid_argument,
                "matrix entries do not match " + std::to_string(rows_) + "x" +
                    std::to_string(cols_));
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (!std::isfinite(entries_[i].real()) || !std::isfinite(entries_[i].imag()))
      throw Error(ErrorCode::invalid_argument,
                  "matrix entry " + std::to_string(i) + " is not finite");
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      out(j, i) = std::conj((*this)(i, j));
  return out;
}

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i)
    t += (*this)(i, i);
  return t;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix &rhs) const {
  if (cols_ != rhs.rows_)
    throw Error(ErrorCode::dimension_mismatch, "matrix product shape mismatch");
  ComplexMatrix out(rows_, rhs.cols_);
  kernels::cmatmul(data(), rhs.data(), out.data(), rows_, cols_, rhs.cols_);
  return out;
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix &rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw Error(ErrorCode::dimension_mismatch, "matrix sum shape mismatch");
  ComplexMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i)
    out.entries_[i] = entries_[i] + rhs.entries_[i];
  return out;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix &rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw Error(ErrorCode::dimension_mismatch, "matrix diff shape mismatch");
  ComplexMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i)
    out.entries_[i] = entries_[i] - rhs.entries_[i];
  return out;
}

ComplexMatrix ComplexMatrix::operator*(double scale) const {
  ComplexMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i)
    out.entries_[i] = entries_[i] * scale;
  return out;
}

double max_abs(const ComplexMatrix &m) {
  double worst = 0.0;
  for (const Complex &z : m.entries())
    worst = std::max(worst, std::abs(z));
  return worst;
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(ErrorCode::dimension_mismatch, "max_abs_diff shape mismatch");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i)
    worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
  return worst;
}

std::vector<double> RealMatrix::apply(const std::vector<double> &v) const {
  if (v.size() != cols)
    throw Error(ErrorCode::length_mismatch, "matrix-vector length mismatch");
  std::vector<double> out(rows, 0.0);
  for (std::size_t i = 0; i < rows; ++i)
    out[i] = kernels::dot(&data[i * cols], v.data(), cols);
  return out;
}

UnitaryMatrix::UnitaryMatrix(ComplexMatrix m, double tol)
    : matrix_(std::move(m)) {
  if (!matrix_.is_square())
    throw Error(ErrorCode::not_square, "unitary matrix must be square");
  const ComplexMatrix gram = matrix_ * matrix_.adjoint();
  const double err = max_abs_diff(gram, ComplexMatrix::identity(matrix_.rows()));
  if (err > tol)
    throw Error(ErrorCode::invalid_argument,
                "matrix is not unitary: ||UU+ - I||_max = " +
                    std::to_string(err));
}

HermitianEig hermitian_eig(const ComplexMatrix &h, double tol) {
  if (!h.is_square())
    throw Error(ErrorCode::not_square, "hermitian_eig requires a square matrix");
  const std::size_t n = h.rows();
  double herm_err = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      herm_err = std::max(herm_err, std::abs(h(i, j) - std::conj(h(j, i))));
  if (herm_err > tol)
    throw Error(ErrorCode::not_hermitian,
                "matrix is not Hermitian: ||H - H+||_max = " +
                    std::to_string(herm_err));

  // Symmetrize before decomposing so round-off in the input cannot leak
  // imaginary eigenvalue parts.
  Eigen::MatrixXcd sym(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      sym(i, j) = 0.5 * (h(i, j) + std::conj(h(j, i)));

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(sym);
  if (solver.info() != Eigen::Success)
    throw Error(ErrorCode::invalid_argument, "eigendecomposition failed");

  // Eigen orders ascending; flip to descending.
  std::vector<double> values(n);
  ComplexMatrix vectors(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    const std::size_t src = n - 1 - c;
    values[c] = solver.eigenvalues()(static_cast<Eigen::Index>(src));
    for (std::size_t r = 0; r < n; ++r)
      vectors(r, c) = solver.eigenvectors()(static_cast<Eigen::Index>(r),
                                            static_cast<Eigen::Index>(src));
  }
  return HermitianEig{std::move(values), UnitaryMatrix(std::move(vectors))};
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex aij = a(i, j);
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q)
          out(i * b.rows() + p, j * b.cols() + q) = aij * b(p, q);
    }
  return out;
}

ComplexMatrix swap_matrix(std::size_t dim_first, std::size_t dim_second) {
  const std::size_t n = dim_first * dim_second;
  ComplexMatrix s(n, n);
  // (a⊗b) index i·M+p picks up (b⊗a) index p·N+i.
  for (std::size_t i = 0; i < dim_first; ++i)
    for (std::size_t p = 0; p < dim_second; ++p)
      s(i * dim_second + p, p * dim_first + i) = 1.0;
  return s;
}

RealMatrix entrywise_abs_squared(const UnitaryMatrix &u) {
  const std::size_t n = u.dim();
  RealMatrix out(n, n);
  kernels::abs_squared(u.matrix().data(), out.data.data(), n * n);
  return out;
}

ComplexMatrix conjugate_by(const ComplexMatrix &u, const ComplexMatrix &a) {
  return (u * a) * u.adjoint();
}

void check_permutation(const std::vector<std::size_t> &sigma, std::size_t n) {
  if (sigma.size() != n)
    throw Error(ErrorCode::not_a_permutation, "permutation has wrong length");
  std::vector<bool> seen(n, false);
  for (std::size_t v : sigma) {
    if (v >= n || seen[v])
      throw Error(ErrorCode::not_a_permutation,
                  "indices are not a bijection on 0.." + std::to_string(n - 1));
    seen[v] = true;
  }
}

ComplexMatrix permutation_matrix(const std::vector<std::size_t> &sigma) {
  const std::size_t n = sigma.size();
  check_permutation(sigma, n);
  ComplexMatrix p(n, n);
  for (std::size_t i = 0; i < n; ++i)
    p(i, sigma[i]) = 1.0;
  return p;
}

} // namespace entroportrait
