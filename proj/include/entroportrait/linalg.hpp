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

#ifndef ENTROPORTRAIT_LINALG_HPP
#define ENTROPORTRAIT_LINALG_HPP

#include <complex>
#include <cstddef>
#include <vector>

#include "entroportrait/errors.hpp"

namespace entroportrait {

using Complex = std::complex<double>;

/// Dense complex matrix, row-major storage. All index maps in the portrait
/// machinery are defined against this layout.
class ComplexMatrix {
public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}
  /// Validating constructor: size must match and every entry must be finite.
  ComplexMatrix(std::size_t rows, std::size_t cols,
                std::vector<Complex> entries);

  static ComplexMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Complex &operator()(std::size_t i, std::size_t j) {
    return entries_[i * cols_ + j];
  }
  const Complex &operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  const std::vector<Complex> &entries() const { return entries_; }
  Complex *data() { return entries_.data(); }
  const Complex *data() const { return entries_.data(); }

  ComplexMatrix adjoint() const;
  Complex trace() const;

  ComplexMatrix operator*(const ComplexMatrix &rhs) const;
  ComplexMatrix operator+(const ComplexMatrix &rhs) const;
  ComplexMatrix operator-(const ComplexMatrix &rhs) const;
  ComplexMatrix operator*(double scale) const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

/// Largest entrywise modulus.
double max_abs(const ComplexMatrix &m);
/// max_ij |a_ij - b_ij|; throws on shape mismatch.
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);

/// Dense real matrix, row-major (stochastic/orthostochastic carriers).
struct RealMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;

  RealMatrix() = default;
  RealMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

  double &at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  double at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

  std::vector<double> apply(const std::vector<double> &v) const;
};

/// Square complex matrix with ‖U·U† − I‖_max ≤ tol enforced at construction.
class UnitaryMatrix {
public:
  explicit UnitaryMatrix(ComplexMatrix m, double tol = 1e-10);

  std::size_t dim() const { return matrix_.rows(); }
  const ComplexMatrix &matrix() const { return matrix_; }

private:
  ComplexMatrix matrix_;
};

struct HermitianEig {
  std::vector<double> eigenvalues; // descending, imaginary parts discarded
  UnitaryMatrix eigenvectors;      // columns are eigenvectors
};

/// Eigendecomposition of a Hermitian matrix. The input is symmetrized as
/// (H+H†)/2 after the Hermiticity check; H = V·diag(λ)·V† reconstructs
/// within 1e-9 max-norm.
HermitianEig hermitian_eig(const ComplexMatrix &h, double tol = 1e-10);

/// Kronecker product A ⊗ B.
ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);

/// Permutation S with (a ⊗ b) = S·(b ⊗ a) for every first-dim-vector a and
/// second-dim-vector b. S(N,M)·S(M,N) = I and S(N,M)ᵀ = S(M,N).
ComplexMatrix swap_matrix(std::size_t dim_first, std::size_t dim_second);

/// Entrywise |U_ij|²; doubly stochastic for unitary U (orthostochastic).
RealMatrix entrywise_abs_squared(const UnitaryMatrix &u);

/// U · A · U†.
ComplexMatrix conjugate_by(const ComplexMatrix &u, const ComplexMatrix &a);

/// P with (P·v)_i = v_{σ(i)}, so (P·A·P†)_{ij} = A_{σ(i),σ(j)}.
/// σ must be a bijection on 0..n-1.
ComplexMatrix permutation_matrix(const std::vector<std::size_t> &sigma);

/// Throws Error(not_a_permutation) unless σ is a bijection on 0..n-1.
void check_permutation(const std::vector<std::size_t> &sigma, std::size_t n);

} // namespace entroportrait

#endif // ENTROPORTRAIT_LINALG_HPP
