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

#include "entroportrait/channels.hpp"
#include "entroportrait/kernels.hpp"
#include "entroportrait/rng.hpp"

using namespace entroportrait;

namespace {

ComplexMatrix diag(std::initializer_list<double> values) {
  ComplexMatrix m(values.size(), values.size());
  std::size_t i = 0;
  for (double v : values)
    m(i, i) = v, ++i;
  return m;
}

// Direct evaluation of the escort definition, independent of escort_map.
std::vector<double> escort_oracle(const std::vector<double> &p, double s) {
  std::vector<double> out(p.size());
  double denom = 0.0;
  for (double v : p)
    denom += std::pow(v, s);
  for (std::size_t k = 0; k < p.size(); ++k)
    out[k] = std::pow(p[k], s) / denom;
  return out;
}

double entropy_oracle(const std::vector<double> &p) {
  double h = 0.0;
  for (double v : p)
    if (v > 0.0)
      h -= v * std::log(v);
  return h;
}

} // namespace

TEST_CASE("escort map: worked values, identity at s=1, sharp limit") {
  const ProbabilityVector p({0.5, 0.25, 0.25});
  const ProbabilityVector sq = escort_map(p, EscortParams{2.0, std::nullopt});
  CHECK(sq[0] == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
  CHECK(sq[1] == doctest::Approx(1.0 / 6.0).epsilon(1e-14));
  CHECK(sq[2] == doctest::Approx(1.0 / 6.0).epsilon(1e-14));

  const ProbabilityVector same = escort_map(p, EscortParams{1.0, std::nullopt});
  for (std::size_t i = 0; i < 3; ++i)
    CHECK(same[i] == doctest::Approx(p[i]).epsilon(1e-14));

  // s = 50 concentrates (0.5, 0.3, 0.2) onto its largest component.
  const ProbabilityVector sharp = escort_map(
      ProbabilityVector({0.5, 0.3, 0.2}), EscortParams{50.0, std::nullopt});
  CHECK(sharp[0] >= 1.0 - 1e-10);

  // Windowed escort over [2,3].
  const ProbabilityVector win =
      escort_map(p, EscortParams{1.0, IndexRange{2, 3}});
  CHECK(win.size() == 2);
  CHECK(win[0] == doctest::Approx(0.5).epsilon(1e-14));

  CHECK_THROWS_AS(
      escort_map(ProbabilityVector({1.0, 0.0, 0.0}),
                 EscortParams{2.0, IndexRange{2, 3}}),
      Error);
  CHECK_THROWS_AS(escort_map(p, EscortParams{0.5, std::nullopt}), Error);
}

TEST_CASE("escort map matches the direct-evaluation oracle") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const ProbabilityVector p = random_probability_vector(6, seed);
    for (double s : {1.0, 2.0, 3.5, 7.0}) {
      const ProbabilityVector got = escort_map(p, EscortParams{s, std::nullopt});
      const std::vector<double> want = escort_oracle(p.components(), s);
      for (std::size_t k = 0; k < 6; ++k)
        CHECK(got[k] == doctest::Approx(want[k]).epsilon(1e-12));
    }
  }
}

TEST_CASE("bayes conditional: direct arithmetic, independence, uniformity") {
  const ProbabilityVector p({0.1, 0.2, 0.3, 0.4});
  const ProbabilityVector cond = bayes_conditional(p, Factorization(2, 2), 1);
  CHECK(cond[0] == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(cond[1] == doctest::Approx(0.75).epsilon(1e-14));

  // Product vector: conditioning returns the first factor for every j.
  const ProbabilityVector prod({0.06, 0.09, 0.15, 0.14, 0.21, 0.35});
  for (std::size_t j = 1; j <= 3; ++j) {
    const ProbabilityVector c = bayes_conditional(prod, Factorization(2, 3), j);
    CHECK(c[0] == doctest::Approx(0.3).epsilon(1e-12));
    CHECK(c[1] == doctest::Approx(0.7).epsilon(1e-12));
  }

  const ProbabilityVector uniform(std::vector<double>(6, 1.0 / 6.0));
  const ProbabilityVector u = bayes_conditional(uniform, Factorization(2, 3), 2);
  CHECK(u[0] == doctest::Approx(0.5).epsilon(1e-14));

  const ProbabilityVector gap({0.5, 0.0, 0.5, 0.0});
  CHECK_THROWS_AS(bayes_conditional(gap, Factorization(2, 2), 2), Error);
}

TEST_CASE("power channel: eigenvalue arithmetic and fixed points") {
  const DensityMatrix rho(diag({0.5, 0.3, 0.2}));
  const DensityMatrix sq = power_channel(rho, 2.0);
  CHECK(sq.matrix()(0, 0).real() == doctest::Approx(25.0 / 38.0).epsilon(1e-13));
  CHECK(sq.matrix()(1, 1).real() == doctest::Approx(9.0 / 38.0).epsilon(1e-13));
  CHECK(sq.matrix()(2, 2).real() == doctest::Approx(4.0 / 38.0).epsilon(1e-13));

  // Pure states are fixed points for every s.
  const DensityMatrix pure = random_density(4, 1, 3);
  for (double s : {1.0, 2.0, 5.0, 17.0})
    CHECK(max_abs_diff(power_channel(pure, s).matrix(), pure.matrix()) <=
          1e-12);

  // So is the maximally mixed state.
  const DensityMatrix mixed(ComplexMatrix::identity(5) * 0.2);
  CHECK(max_abs_diff(power_channel(mixed, 3.0).matrix(), mixed.matrix()) <=
        1e-12);

  CHECK_THROWS_AS(power_channel(rho, 0.99), Error);
}

TEST_CASE("power channel: purity grows and conjugation commutes") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const DensityMatrix rho = random_density(5, 1 + seed % 5, seed);
    double purity = kernels::sum_squares(rho.spectrum().data(), 5);
    for (double s : {1.0, 2.0, 3.0, 4.0}) {
      const DensityMatrix mapped = power_channel(rho, s);
      const double next = kernels::sum_squares(mapped.spectrum().data(), 5);
      CHECK(next >= purity - 1e-12);
      purity = next;
    }

    const UnitaryMatrix u = random_unitary(5, 100 + seed);
    const DensityMatrix rotated(conjugate_by(u.matrix(), rho.matrix()));
    CHECK(max_abs_diff(power_channel(rotated, 2.0).matrix(),
                       conjugate_by(u.matrix(),
                                    power_channel(rho, 2.0).matrix())) <=
          1e-10);
  }
}

TEST_CASE("truncation channel: rescaled leading block") {
  const DensityMatrix rho(diag({0.5, 0.3, 0.2}));
  const DensityMatrix cut = truncation_channel(rho, 2);
  CHECK(cut.dim() == 2);
  CHECK(cut.matrix()(0, 0).real() == doctest::Approx(0.625).epsilon(1e-14));
  CHECK(cut.matrix()(1, 1).real() == doctest::Approx(0.375).epsilon(1e-14));

  // Support entirely inside the first m levels: block unchanged.
  ComplexMatrix sup(4, 4);
  sup(0, 0) = 0.6;
  sup(0, 1) = 0.2;
  sup(1, 0) = 0.2;
  sup(1, 1) = 0.4;
  const DensityMatrix supported(sup);
  const DensityMatrix same = truncation_channel(supported, 2);
  CHECK(max_abs_diff(same.matrix(), ComplexMatrix(2, 2, {0.6, 0.2, 0.2, 0.4})) <=
        1e-12);

  const DensityMatrix empty(diag({0.0, 0.0, 0.5, 0.5}));
  CHECK_THROWS_AS(truncation_channel(empty, 2), Error);
  CHECK_THROWS_AS(truncation_channel(rho, 3), Error);
}

TEST_CASE("convex power channel: delta weight, half-half mix, validity") {
  const DensityMatrix rho(diag({0.5, 0.3, 0.2}));
  const DensityMatrix same =
      convex_power_channel(rho, ProbabilityVector({1.0}));
  CHECK(max_abs_diff(same.matrix(), rho.matrix()) <= 1e-12);

  const DensityMatrix mix =
      convex_power_channel(rho, ProbabilityVector({0.5, 0.5}));
  CHECK(mix.matrix()(0, 0).real() ==
        doctest::Approx(0.5 * 0.5 + 0.5 * 25.0 / 38.0).epsilon(1e-13));
  CHECK(mix.matrix()(1, 1).real() ==
        doctest::Approx(0.5 * 0.3 + 0.5 * 9.0 / 38.0).epsilon(1e-13));

  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const DensityMatrix r = random_density(4, 4, seed);
    const ProbabilityVector w = random_probability_vector(3, seed + 50);
    CHECK_NOTHROW(validate_density(convex_power_channel(r, w).matrix()));
  }
}

TEST_CASE("escort entropy chain: frozen values and monotonicity") {
  const ProbabilityVector p({0.5, 0.25, 0.25});
  const std::vector<double> chain = escort_entropy_chain(p, 3);
  REQUIRE(chain.size() == 3);
  // s=1: (3/2)ln2; s=2: escort (2/3,1/6,1/6); s=3: escort (0.8,0.1,0.1).
  CHECK(chain[0] == doctest::Approx(1.0397207708399179).epsilon(1e-12));
  CHECK(chain[1] == doctest::Approx(0.8675632284814612).epsilon(1e-12));
  CHECK(chain[2] == doctest::Approx(0.639031859650177).epsilon(1e-12));
  // The frozen constants must agree with the direct-evaluation oracle.
  CHECK(chain[1] ==
        doctest::Approx(entropy_oracle(escort_oracle(p.components(), 2.0)))
            .epsilon(1e-13));
  CHECK(chain[2] ==
        doctest::Approx(entropy_oracle(escort_oracle(p.components(), 3.0)))
            .epsilon(1e-13));

  const ProbabilityVector uniform(std::vector<double>(4, 0.25));
  for (double h : escort_entropy_chain(uniform, 5))
    CHECK(h == doctest::Approx(std::log(4.0)).epsilon(1e-12));

  const ProbabilityVector delta({1.0, 0.0, 0.0});
  for (double h : escort_entropy_chain(delta, 4))
    CHECK(std::abs(h) <= 1e-14);

  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto c = escort_entropy_chain(random_probability_vector(8, seed), 10);
    for (std::size_t i = 1; i < c.size(); ++i)
      CHECK(c[i] <= c[i - 1] + 1e-12);
  }
}

TEST_CASE("quantum power chain: spectral equivalence and monotonicity") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const DensityMatrix rho = random_density(6, 1 + seed % 6, seed * 11);
    const auto qchain = quantum_power_entropy_chain(rho, 8);
    const auto cchain =
        escort_entropy_chain(ProbabilityVector(rho.spectrum()), 8);
    REQUIRE(qchain.size() == cchain.size());
    for (std::size_t i = 0; i < qchain.size(); ++i)
      CHECK(std::abs(qchain[i] - cchain[i]) <= 1e-12);
    for (std::size_t i = 1; i < qchain.size(); ++i)
      CHECK(qchain[i] <= qchain[i - 1] + 1e-12);
  }

  const DensityMatrix mixed(ComplexMatrix::identity(4) * 0.25);
  for (double h : quantum_power_entropy_chain(mixed, 5))
    CHECK(h == doctest::Approx(std::log(4.0)).epsilon(1e-12));

  const DensityMatrix pure = random_density(5, 1, 2);
  for (double h : quantum_power_entropy_chain(pure, 4))
    CHECK(std::abs(h) <= 1e-9);
}

TEST_CASE("ppt minimum eigenvalue: products, Bell, maximally mixed") {
  const DensityMatrix a = random_density(2, 2, 5);
  const DensityMatrix b = random_density(2, 2, 6);
  const DensityMatrix prod(kron(a.matrix(), b.matrix()));
  CHECK(ppt_min_eigenvalue(prod, Factorization(2, 2)) >= -1e-10);

  ComplexMatrix bell(4, 4);
  bell(0, 0) = bell(0, 3) = bell(3, 0) = bell(3, 3) = 0.5;
  CHECK(ppt_min_eigenvalue(DensityMatrix(bell), Factorization(2, 2)) ==
        doctest::Approx(-0.5).epsilon(1e-10));

  const DensityMatrix mixed(ComplexMatrix::identity(4) * 0.25);
  CHECK(ppt_min_eigenvalue(mixed, Factorization(2, 2)) ==
        doctest::Approx(0.25).epsilon(1e-12));

  // 2x3: product states stay PPT.
  const DensityMatrix c = random_density(3, 3, 7);
  const DensityMatrix prod23(kron(a.matrix(), c.matrix()));
  CHECK(ppt_min_eigenvalue(prod23, Factorization(2, 3)) >= -1e-10);
}

TEST_CASE("power channel preserves the X shape (closed-form square)") {
  const DensityMatrix x = random_separable_xstate(99);
  const DensityMatrix mapped = power_channel(x, 2.0);

  // Independent route: R = ρ·ρ / Tr(ρ·ρ).
  const ComplexMatrix sq = x.matrix() * x.matrix();
  const double tr = sq.trace().real();
  CHECK(max_abs_diff(mapped.matrix(), sq * (1.0 / tr)) <= 1e-12);

  // Only diagonal and antidiagonal entries survive.
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if (i != j && i + j != 3)
        CHECK(std::abs(mapped.matrix()(i, j)) <= 1e-12);
}

TEST_CASE("x-state search: determinism, PPT sampler, diagonal no-hit") {
  const XSearchReport a = xstate_entanglement_search(400, 2024, 2.0);
  const XSearchReport b = xstate_entanglement_search(400, 2024, 2.0);
  REQUIRE(a.found.size() == b.found.size());
  for (std::size_t i = 0; i < a.found.size(); ++i) {
    CHECK(a.found[i].trial == b.found[i].trial);
    CHECK(a.found[i].min_eig_before == b.found[i].min_eig_before);
    CHECK(a.found[i].min_eig_after == b.found[i].min_eig_after);
  }
  for (const XStateHit &hit : a.found) {
    CHECK(hit.min_eig_before >= -1e-10);
    CHECK(hit.min_eig_after < -1e-8);
  }

  // Every sampled state is PPT before the channel.
  for (std::uint64_t seed = 0; seed < 200; ++seed)
    CHECK(ppt_min_eigenvalue(random_separable_xstate(seed),
                             Factorization(2, 2)) >= -1e-10);

  // Diagonal (hence product-basis classical) X-states stay diagonal and PPT.
  const DensityMatrix diagonal(diag({0.4, 0.3, 0.2, 0.1}));
  const DensityMatrix after = power_channel(diagonal, 2.0);
  CHECK(ppt_min_eigenvalue(after, Factorization(2, 2)) >= -1e-10);
}
