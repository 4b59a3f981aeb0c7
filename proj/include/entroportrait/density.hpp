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

#ifndef ENTROPORTRAIT_DENSITY_HPP
#define ENTROPORTRAIT_DENSITY_HPP

#include <cstdint>

#include "entroportrait/linalg.hpp"
#include "entroportrait/prob.hpp"

namespace entroportrait {

/// Hermitian (≤1e-10), unit-trace (≤1e-9), positive-semidefinite (≥ −1e-9)
/// complex matrix. Construction symmetrizes the input, verifies all three
/// properties and clamps round-off-negative eigenvalues to zero; the stored
/// spectrum is descending.
class DensityMatrix {
public:
  explicit DensityMatrix(const ComplexMatrix &m);

  std::size_t dim() const { return matrix_.rows(); }
  const ComplexMatrix &matrix() const { return matrix_; }

  /// Eigenvalues, descending, clamped to [0, 1].
  const std::vector<double> &spectrum() const { return spectrum_; }

private:
  ComplexMatrix matrix_;
  std::vector<double> spectrum_;
};

/// Named alias for the validating constructor.
inline DensityMatrix validate_density(const ComplexMatrix &m) {
  return DensityMatrix(m);
}

/// S = −Tr ρ ln ρ = −Σ λ ln λ in nats; basis independent.
double von_neumann_entropy(const DensityMatrix &rho);

struct SpectralDecomposition {
  ProbabilityVector eigen_probs; // descending, renormalized
  UnitaryMatrix basis;           // columns are the matching eigenvectors
};

SpectralDecomposition spectral_decompose(const DensityMatrix &rho);

/// Ginibre construction ρ = G·G†/Tr(G·G†) with G dim×rank; deterministic
/// per seed, rank-controllable.
DensityMatrix random_density(std::size_t dim, std::size_t rank,
                             std::uint64_t seed);

/// Haar-distributed unitary: orthonormalized seeded complex Gaussian matrix
/// (modified Gram–Schmidt keeps the triangular factor's diagonal positive
/// real); deterministic per seed.
UnitaryMatrix random_unitary(std::size_t dim, std::uint64_t seed);

} // namespace entroportrait

#endif // ENTROPORTRAIT_DENSITY_HPP
