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

#include <cfloat>
#include <cmath>
#include <vector>

#include "entroportrait/kernels.hpp"
#include "entroportrait/rng.hpp"

using namespace entroportrait;
namespace kd = entroportrait::kernels::detail;

namespace {

std::vector<double> random_vec(std::size_t n, std::uint64_t seed,
                               bool positive = false) {
  Rng rng(seed);
  std::vector<double> v(n);
  for (double &x : v)
    x = positive ? rng.uniform() + 1e-6 : rng.gaussian();
  return v;
}

std::vector<std::complex<double>> random_cvec(std::size_t n,
                                              std::uint64_t seed) {
  Rng rng(seed);
  std::vector<std::complex<double>> v(n);
  for (auto &z : v)
    z = rng.complex_gaussian();
  return v;
}

bool have_avx2() {
  return kernels::backend_supported(kernels::Backend::avx2);
}

} // namespace

TEST_CASE("reductions: scalar and avx2 agree on random data and tails") {
  if (!have_avx2())
    return;
  for (std::size_t n : {1u, 2u, 3u, 4u, 5u, 7u, 8u, 13u, 64u, 257u}) {
    const auto x = random_vec(n, 100 + n);
    const auto y = random_vec(n, 200 + n);
    CHECK(kd::sum_avx2(x.data(), n) ==
          doctest::Approx(kd::sum_scalar(x.data(), n)).epsilon(1e-13));
    CHECK(kd::dot_avx2(x.data(), y.data(), n) ==
          doctest::Approx(kd::dot_scalar(x.data(), y.data(), n))
              .epsilon(1e-12));
    CHECK(kd::sum_squares_avx2(x.data(), n) ==
          doctest::Approx(kd::sum_squares_scalar(x.data(), n)).epsilon(1e-13));
  }
}

TEST_CASE("entropy kernel: backends agree on probability-like data") {
  if (!have_avx2())
    return;
  for (std::size_t n : {1u, 3u, 4u, 6u, 12u, 24u, 101u}) {
    auto x = random_vec(n, 300 + n, true);
    double total = kd::sum_scalar(x.data(), n);
    for (double &v : x)
      v /= total;
    const double a = kd::neg_xlogx_sum_scalar(x.data(), n);
    const double b = kd::neg_xlogx_sum_avx2(x.data(), n);
    CHECK(std::abs(a - b) <= 1e-13);
  }
}

TEST_CASE("entropy kernel: zeros, ones, subnormals and negatives contribute 0") {
  const std::vector<double> x = {0.0, 1.0, 0.0, 1.0, 0.0};
  CHECK(kd::neg_xlogx_sum_scalar(x.data(), x.size()) == 0.0);
  if (have_avx2())
    CHECK(kd::neg_xlogx_sum_avx2(x.data(), x.size()) == 0.0);

  // Clamped round-off (tiny negatives) and subnormals are treated as zero.
  const std::vector<double> y = {-0.0, 1e-320, DBL_MIN / 2.0, 0.5, 0.5};
  const double expect = -2.0 * 0.5 * std::log(0.5);
  CHECK(kd::neg_xlogx_sum_scalar(y.data(), y.size()) ==
        doctest::Approx(expect).epsilon(1e-15));
  if (have_avx2())
    CHECK(kd::neg_xlogx_sum_avx2(y.data(), y.size()) ==
          doctest::Approx(expect).epsilon(1e-15));
}

TEST_CASE("vector log matches libm across 14 decades") {
  if (!have_avx2())
    return;
  Rng rng(42);
  for (int trial = 0; trial < 200000; ++trial) {
    // Keep x·ln x representable so the quotient below recovers ln x exactly.
    const double mag = -307.0 + 611.0 * rng.uniform();
    const double x = std::pow(10.0, mag) * (0.5 + rng.uniform());
    if (x < DBL_MIN || !std::isfinite(x))
      continue;
    const double got = -kd::neg_xlogx_sum_avx2(&x, 1) / x;
    const double want = std::log(x);
    CHECK(std::abs(got - want) <= 1e-12 * std::max(1.0, std::abs(want)));
  }
}

TEST_CASE("abs_squared: backends agree, including odd tails") {
  if (!have_avx2())
    return;
  for (std::size_t n : {1u, 2u, 3u, 4u, 5u, 9u, 36u, 100u}) {
    const auto z = random_cvec(n, 500 + n);
    std::vector<double> a(n), b(n);
    kd::abs_squared_scalar(z.data(), a.data(), n);
    kd::abs_squared_avx2(z.data(), b.data(), n);
    for (std::size_t i = 0; i < n; ++i)
      CHECK(a[i] == doctest::Approx(b[i]).epsilon(1e-14));
  }
}

TEST_CASE("cmatmul: backends agree on rectangular shapes") {
  if (!have_avx2())
    return;
  struct Shape {
    std::size_t n, k, m;
  };
  for (const Shape s : {Shape{1, 1, 1}, Shape{2, 3, 2}, Shape{3, 3, 3},
                        Shape{6, 6, 6}, Shape{5, 7, 3}, Shape{4, 2, 9}}) {
    const auto a = random_cvec(s.n * s.k, 700 + s.n);
    const auto b = random_cvec(s.k * s.m, 800 + s.m);
    std::vector<std::complex<double>> c1(s.n * s.m), c2(s.n * s.m);
    kd::cmatmul_scalar(a.data(), b.data(), c1.data(), s.n, s.k, s.m);
    kd::cmatmul_avx2(a.data(), b.data(), c2.data(), s.n, s.k, s.m);
    for (std::size_t i = 0; i < c1.size(); ++i)
      CHECK(std::abs(c1[i] - c2[i]) <= 1e-12);
  }
}

TEST_CASE("dispatch: forcing a backend routes the public entry points") {
  const auto x = random_vec(37, 1234, true);
  const kernels::Backend original = kernels::active_backend();

  kernels::set_backend(kernels::Backend::scalar);
  const double scalar_value = kernels::neg_xlogx_sum(x.data(), x.size());
  CHECK(scalar_value ==
        doctest::Approx(kd::neg_xlogx_sum_scalar(x.data(), x.size()))
            .epsilon(1e-15));

  if (have_avx2()) {
    kernels::set_backend(kernels::Backend::avx2);
    CHECK(kernels::active_backend() == kernels::Backend::avx2);
    const double simd_value = kernels::neg_xlogx_sum(x.data(), x.size());
    CHECK(std::abs(simd_value - scalar_value) <= 1e-13);
  }
  kernels::set_backend(original);
}
