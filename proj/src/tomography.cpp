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

#include "entroportrait/tomography.hpp"

#include <cmath>
#include <stdexcept>

namespace entroportrait {

namespace {
constexpr double kRouteTol = 1e-10;
} // namespace

std::vector<double> spin_labels(std::size_t n) {
  std::vector<double> labels(n);
  const double j = (static_cast<double>(n) - 1.0) / 2.0;
  for (std::size_t i = 0; i < n; ++i)
    labels[i] = j - static_cast<double>(i);
  return labels;
}

Tomogram tomogram(const DensityMatrix &rho, const UnitaryMatrix &u) {
  if (rho.dim() != u.dim())
    throw Error(ErrorCode::dimension_mismatch,
                "state dim " + std::to_string(rho.dim()) +
                    " vs basis dim " + std::to_string(u.dim()));
  const SpectralDecomposition dec = spectral_decompose(rho);
  const UnitaryMatrix rotated(u.matrix() * dec.basis.matrix());
  const RealMatrix ortho = entrywise_abs_squared(rotated);
  std::vector<double> w = ortho.apply(dec.eigen_probs.components());

  // Oracle route: w_m = (u ρ u†)_{mm}.
  const ComplexMatrix conj = conjugate_by(u.matrix(), rho.matrix());
  for (std::size_t m = 0; m < w.size(); ++m) {
    if (std::abs(w[m] - conj(m, m).real()) > kRouteTol)
      throw std::logic_error(
          "tomogram routes diverge at component " + std::to_string(m) +
          ": orthostochastic " + std::to_string(w[m]) + " vs diagonal " +
          std::to_string(conj(m, m).real()));
  }
  return Tomogram{ProbabilityVector(std::move(w)), u, spin_labels(u.dim())};
}

ExtendedTomogramMap extend_orthostochastic(const ProbabilityVector &rho_vec,
                                           const UnitaryMatrix &u,
                                           std::size_t s) {
  if (s < 1)
    throw Error(ErrorCode::invalid_argument,
                "extension needs s >= 1 zero components");
  if (rho_vec.size() != u.dim())
    throw Error(ErrorCode::dimension_mismatch,
                "spectrum length does not match unitary dim");
  const std::size_t n = rho_vec.size();
  const RealMatrix block = entrywise_abs_squared(u);
  RealMatrix extended(n + s, n + s);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      extended.at(i, j) = block.at(i, j);
  for (std::size_t i = n; i < n + s; ++i)
    extended.at(i, i) = 1.0;
  return ExtendedTomogramMap{pad_to_length(rho_vec, n + s),
                             std::move(extended)};
}

SubadditivityReport tomographic_subadditivity(const DensityMatrix &rho,
                                              const UnitaryMatrix &u,
                                              const Factorization &f) {
  if (f.n() < rho.dim())
    throw Error(ErrorCode::dimension_mismatch,
                "factorization n = " + std::to_string(f.n()) +
                    " is smaller than state dim " + std::to_string(rho.dim()));
  ProbabilityVector w = tomogram(rho, u).probabilities;
  if (f.n() > w.size())
    w = pad_to_length(w, f.n());
  return subadditivity_report(w, f);
}

UnitaryMatrix separating_transform(const UnitaryMatrix &u01,
                                   const UnitaryMatrix &u02,
                                   const UnitaryMatrix &u0) {
  if (u01.dim() * u02.dim() != u0.dim())
    throw Error(ErrorCode::dimension_mismatch,
                "local dims " + std::to_string(u01.dim()) + "x" +
                    std::to_string(u02.dim()) + " do not compose to " +
                    std::to_string(u0.dim()));
  return UnitaryMatrix(kron(u01.matrix(), u02.matrix()) *
                       u0.matrix().adjoint());
}

Tomogram separable_tomogram(const DensityMatrix &rho, const UnitaryMatrix &u01,
                            const UnitaryMatrix &u02, const UnitaryMatrix &u) {
  if (u01.dim() * u02.dim() != rho.dim() || u.dim() != rho.dim())
    throw Error(ErrorCode::dimension_mismatch,
                "separable tomogram dimensions are inconsistent");
  const SpectralDecomposition dec = spectral_decompose(rho);
  const ComplexMatrix local = kron(u01.matrix(), u02.matrix());
  const UnitaryMatrix rotated(u.matrix() * local);
  std::vector<double> w =
      entrywise_abs_squared(rotated).apply(dec.eigen_probs.components());

  // The same vector must arise as the tomogram of the product-basis state
  // ρ_sep = (u01⊗u02)·diag(ρ⃗)·(u01⊗u02)†.
  const std::size_t n = rho.dim();
  ComplexMatrix scaled(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      scaled(i, j) = local(i, j) * dec.eigen_probs[j];
  const DensityMatrix rho_sep(scaled * local.adjoint());
  const Tomogram oracle = tomogram(rho_sep, u);
  for (std::size_t m = 0; m < n; ++m) {
    if (std::abs(w[m] - oracle.probabilities[m]) > kRouteTol)
      throw std::logic_error("separable tomogram diverges from the tomogram "
                             "of the rotated state at component " +
                             std::to_string(m));
  }
  return Tomogram{ProbabilityVector(std::move(w)), u, spin_labels(n)};
}

} // namespace entroportrait
