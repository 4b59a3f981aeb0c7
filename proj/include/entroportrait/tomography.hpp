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

#ifndef ENTROPORTRAIT_TOMOGRAPHY_HPP
#define ENTROPORTRAIT_TOMOGRAPHY_HPP

#include "entroportrait/density.hpp"
#include "entroportrait/stochastic.hpp"

namespace entroportrait {

/// Measurement statistics of a state in a rotated basis.
struct Tomogram {
  ProbabilityVector probabilities;
  UnitaryMatrix measurement_basis;
  std::vector<double> basis_labels; // spin projections m = j-i, metadata only
};

/// Spin-projection labels m = j, j-1, ..., -j with j = (n-1)/2.
std::vector<double> spin_labels(std::size_t n);

/// w(u) = |u·u₀|²·ρ⃗ with (ρ⃗, u₀) the spectral decomposition of ρ. The
/// orthostochastic route is cross-checked against diag(u·ρ·u†) inside the
/// call; divergence beyond 1e-10 throws (it would mean a broken
/// decomposition, not bad input).
Tomogram tomogram(const DensityMatrix &rho, const UnitaryMatrix &u);

struct ExtendedTomogramMap {
  ProbabilityVector padded_spectrum; // length n+s, trailing zeros
  RealMatrix matrix;                 // block-diag(|u|², 1_s)
};

/// Prime-dimension treatment: appends s ≥ 1 zero components to the spectrum
/// vector and extends the orthostochastic matrix of `u` by an s×s identity
/// block; the extra tomogram components are exactly zero.
ExtendedTomogramMap extend_orthostochastic(const ProbabilityVector &rho_vec,
                                           const UnitaryMatrix &u,
                                           std::size_t s);

/// Classical subadditivity applied to the tomogram of ρ in basis u; the
/// tomogram is zero-padded when f.n exceeds dim(ρ).
SubadditivityReport tomographic_subadditivity(const DensityMatrix &rho,
                                              const UnitaryMatrix &u,
                                              const Factorization &f);

/// A = (u01 ⊗ u02)·u0†, the state-dependent transform mapping the
/// eigenbasis to a product basis.
UnitaryMatrix separating_transform(const UnitaryMatrix &u01,
                                   const UnitaryMatrix &u02,
                                   const UnitaryMatrix &u0);

/// w_A(u) = |u·(u01 ⊗ u02)|²·ρ⃗ — the tomogram of the separable state with
/// ρ's spectrum diagonal in the product basis. Cross-checked internally
/// against the direct tomogram of that state.
Tomogram separable_tomogram(const DensityMatrix &rho, const UnitaryMatrix &u01,
                            const UnitaryMatrix &u02, const UnitaryMatrix &u);

} // namespace entroportrait

#endif // ENTROPORTRAIT_TOMOGRAPHY_HPP
