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

#include <doctest.h>

#include <cmath>

#include "entroportrait/portrait.hpp"
#include "entroportrait/rng.hpp"
#include "entroportrait/tomography.hpp"

using namespace entroportrait;

TEST_CASE("tomogram: identity basis on a diagonal state reads the diagonal") {
  ComplexMatrix d(3, 3);
  d(0, 0) = 0.5;
  d(1, 1) = 0.3;
  d(2, 2) = 0.2;
  const Tomogram t = tomogram(DensityMatrix(d),
                              UnitaryMatrix(ComplexMatrix::identity(3)));
  CHECK(t.probabilities[0] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(t.probabilities[1] == doctest::Approx(0.3).epsilon(1e-12));
  CHECK(t.probabilities[2] == doctest::Approx(0.2).epsilon(1e-12));
  // Spin labels for n=3 (j=1): 1, 0, -1.
  CHECK(t.basis_labels == std::vector<double>({1.0, 0.0, -1.0}));
}

TEST_CASE("tomogram: normalization and route agreement for seeded pairs") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const DensityMatrix rho = random_density(6, 1 + seed % 6, seed);
    const UnitaryMatrix u = random_unitary(6, 1000 + seed);
    const Tomogram t = tomogram(rho, u); // throws if the routes split
    double total = 0.0;
    for (std::size_t i = 0; i < 6; ++i)
      total += t.probabilities[i];
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));

    // Re-derive the oracle route here as well.
    const ComplexMatrix rotated = conjugate_by(u.matrix(), rho.matrix());
    for (std::size_t m = 0; m < 6; ++m)
      CHECK(std::abs(t.probabilities[m] - rotated(m, m).real()) <= 1e-10);
  }
}

TEST_CASE("tomogram of the maximally mixed state is uniform in any basis") {
  const DensityMatrix mixed(ComplexMatrix::identity(6) * (1.0 / 6.0));
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Tomogram t = tomogram(mixed, random_unitary(6, seed));
    for (std::size_t i = 0; i < 6; ++i)
      CHECK(t.probabilities[i] == doctest::Approx(1.0 / 6.0).epsilon(1e-10));
  }
}

TEST_CASE("tomogram rejects mismatched dimensions") {
  CHECK_THROWS_AS(tomogram(random_density(4, 4, 0), random_unitary(6, 0)),
                  Error);
}

TEST_CASE("tomogram routes agree on partially degenerate spectra") {
  // Eigenbasis is ambiguous inside each degenerate block; the contract is
  // route equality, which must hold regardless of the basis returned.
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    ComplexMatrix d(6, 6);
    d(0, 0) = d(1, 1) = d(2, 2) = 0.25;
    d(3, 3) = d(4, 4) = 0.1;
    d(5, 5) = 0.05;
    const UnitaryMatrix basis = random_unitary(6, 900 + seed);
    const DensityMatrix rho(conjugate_by(basis.matrix(), d));
    const UnitaryMatrix u = random_unitary(6, 950 + seed);
    const Tomogram t = tomogram(rho, u); // internal cross-check must pass
    const ComplexMatrix rotated = conjugate_by(u.matrix(), rho.matrix());
    for (std::size_t m = 0; m < 6; ++m)
      CHECK(std::abs(t.probabilities[m] - rotated(m, m).real()) <= 1e-10);
  }
}

TEST_CASE("extend_orthostochastic: block structure and zero tail") {
  const DensityMatrix rho = random_density(5, 5, 9);
  const SpectralDecomposition dec = spectral_decompose(rho);
  const UnitaryMatrix u = random_unitary(5, 10);
  const UnitaryMatrix rotated(u.matrix() * dec.basis.matrix());

  const ExtendedTomogramMap ext =
      extend_orthostochastic(dec.eigen_probs, rotated, 1);
  CHECK(ext.padded_spectrum.size() == 6);
  CHECK(ext.padded_spectrum[5] == 0.0);
  CHECK(ext.matrix.rows == 6);
  CHECK(ext.matrix.at(5, 5) == 1.0);
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(ext.matrix.at(i, 5) == 0.0);
    CHECK(ext.matrix.at(5, i) == 0.0);
  }

  // Tomogram through the extended map: components beyond n are exactly 0,
  // the rest reproduce the unextended tomogram.
  const std::vector<double> w =
      ext.matrix.apply(ext.padded_spectrum.components());
  CHECK(w[5] == 0.0);
  const Tomogram base = tomogram(rho, u);
  for (std::size_t i = 0; i < 5; ++i)
    CHECK(w[i] == doctest::Approx(base.probabilities[i]).epsilon(1e-12));

  // Entropy is untouched by the zero components.
  CHECK(std::abs(shannon_entropy(ext.padded_spectrum) -
                 shannon_entropy(dec.eigen_probs)) <= 1e-12);

  CHECK_THROWS_AS(extend_orthostochastic(dec.eigen_probs, rotated, 0), Error);
}

TEST_CASE("tomographic subadditivity: Haar sweep stays nonnegative") {
  const DensityMatrix rho = random_density(6, 6, 33);
  const Factorization f(2, 3);
  double min_info = 1e9;
  for (std::uint64_t t = 0; t < 100; ++t) {
    const UnitaryMatrix u = random_unitary(6, derive_seed(33, t));
    const SubadditivityReport r = tomographic_subadditivity(rho, u, f);
    min_info = std::min(min_info, r.information);
  }
  CHECK(min_info >= -1e-10);
}

TEST_CASE("tomographic subadditivity: diagonalizing basis and mixed state") {
  // u = u0+ turns the orthostochastic matrix into a permutation, so the
  // tomogram is the spectrum vector itself.
  const DensityMatrix rho = random_density(6, 6, 55);
  const SpectralDecomposition dec = spectral_decompose(rho);
  const UnitaryMatrix diagonalizing(dec.basis.matrix().adjoint());
  const SubadditivityReport r =
      tomographic_subadditivity(rho, diagonalizing, Factorization(2, 3));
  const SubadditivityReport direct =
      subadditivity_report(dec.eigen_probs, Factorization(2, 3));
  CHECK(r.information == doctest::Approx(direct.information).epsilon(1e-9));

  // Maximally mixed: zero information for every basis.
  const DensityMatrix mixed(ComplexMatrix::identity(6) * (1.0 / 6.0));
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const SubadditivityReport m = tomographic_subadditivity(
        mixed, random_unitary(6, seed), Factorization(2, 3));
    CHECK(std::abs(m.information) <= 1e-10);
  }

  // Padding: a 5-level state against the (3,2) coding of n' = 6.
  const DensityMatrix rho5 = random_density(5, 5, 77);
  const SubadditivityReport padded = tomographic_subadditivity(
      rho5, random_unitary(5, 3), Factorization(3, 2));
  CHECK(padded.information >= -1e-10);
}

TEST_CASE("separating transform: algebra and unitarity") {
  const UnitaryMatrix id2(ComplexMatrix::identity(2));
  const UnitaryMatrix id3(ComplexMatrix::identity(3));
  const UnitaryMatrix id6(ComplexMatrix::identity(6));
  CHECK(max_abs_diff(separating_transform(id2, id3, id6).matrix(),
                     ComplexMatrix::identity(6)) == 0.0);

  const UnitaryMatrix u01 = random_unitary(2, 1);
  const UnitaryMatrix u02 = random_unitary(3, 2);
  const UnitaryMatrix u0 = random_unitary(6, 3);
  const UnitaryMatrix a = separating_transform(u01, u02, u0); // validated
  CHECK(max_abs_diff(a.matrix() * u0.matrix(),
                     kron(u01.matrix(), u02.matrix())) <= 1e-12);

  CHECK_THROWS_AS(separating_transform(u01, u02, random_unitary(4, 4)), Error);
}

TEST_CASE("separable tomogram: mixed state, oracle equality, Bell case") {
  const DensityMatrix mixed(ComplexMatrix::identity(6) * (1.0 / 6.0));
  const UnitaryMatrix u01 = random_unitary(2, 11);
  const UnitaryMatrix u02 = random_unitary(3, 12);
  const Tomogram flat =
      separable_tomogram(mixed, u01, u02, random_unitary(6, 13));
  for (std::size_t i = 0; i < 6; ++i)
    CHECK(flat.probabilities[i] == doctest::Approx(1.0 / 6.0).epsilon(1e-10));

  // Seeded states: the internal oracle cross-check must hold.
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const DensityMatrix rho = random_density(6, 1 + seed % 6, 500 + seed);
    CHECK_NOTHROW(
        separable_tomogram(rho, u01, u02, random_unitary(6, 600 + seed)));
  }

  // Entangled input: measuring in the product basis returns the spectrum,
  // so the subadditivity information is that of the spectrum vector.
  ComplexMatrix bell(4, 4);
  bell(0, 0) = bell(0, 3) = bell(3, 0) = bell(3, 3) = 0.5;
  const DensityMatrix bell_rho(bell);
  const UnitaryMatrix v01 = random_unitary(2, 21);
  const UnitaryMatrix v02 = random_unitary(2, 22);
  const UnitaryMatrix measuring(
      kron(v01.matrix(), v02.matrix()).adjoint());
  const Tomogram w = separable_tomogram(bell_rho, v01, v02, measuring);
  const SpectralDecomposition dec = spectral_decompose(bell_rho);
  for (std::size_t i = 0; i < 4; ++i)
    CHECK(w.probabilities[i] ==
          doctest::Approx(dec.eigen_probs[i]).epsilon(1e-10));
  const SubadditivityReport rep =
      subadditivity_report(w.probabilities, Factorization(2, 2));
  CHECK(std::abs(rep.information) <= 1e-9); // spectrum (1,0,0,0) is a delta
}
