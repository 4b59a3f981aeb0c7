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

#ifndef ENTROPORTRAIT_KERNELS_HPP
#define ENTROPORTRAIT_KERNELS_HPP

#include <complex>
#include <cstddef>

// Data-parallel primitives behind the entropy / portrait machinery.
//
// Every kernel has a scalar reference implementation and (on x86-64) an AVX2
// variant; the active backend is chosen once at startup from cpuid and can be
// overridden for tests. Both backends implement the same value contract; the
// test suite checks them against each other on random inputs.

namespace entroportrait::kernels {

enum class Backend { scalar, avx2 };

/// Backend currently used by the dispatching kernels below.
Backend active_backend();

/// True if `b` can run on this machine.
bool backend_supported(Backend b);

/// Force a backend (tests, debugging). Throws if unsupported.
void set_backend(Backend b);

/// Σ x_i
double sum(const double *x, std::size_t n);

/// Σ x_i y_i
double dot(const double *x, const double *y, std::size_t n);

/// Σ x_i²
double sum_squares(const double *x, std::size_t n);

/// −Σ x_i ln x_i with the convention x·ln x = 0 for x ≤ 0 (and for
/// subnormal x, whose true contribution is below 1e-305).
double neg_xlogx_sum(const double *x, std::size_t n);

/// out_i = |z_i|²
void abs_squared(const std::complex<double> *z, double *out, std::size_t n);

/// Row-major complex matrix product: C (n×m) = A (n×k) · B (k×m).
/// C must not alias A or B.
void cmatmul(const std::complex<double> *a, const std::complex<double> *b,
             std::complex<double> *c, std::size_t n, std::size_t k,
             std::size_t m);

namespace detail {
// Scalar reference implementations, exposed so the equivalence tests can
// pin the dispatched result against them regardless of the active backend.
double sum_scalar(const double *x, std::size_t n);
double dot_scalar(const double *x, const double *y, std::size_t n);
double sum_squares_scalar(const double *x, std::size_t n);
double neg_xlogx_sum_scalar(const double *x, std::size_t n);
void abs_squared_scalar(const std::complex<double> *z, double *out,
                        std::size_t n);
void cmatmul_scalar(const std::complex<double> *a,
                    const std::complex<double> *b, std::complex<double> *c,
                    std::size_t n, std::size_t k, std::size_t m);

// AVX2 implementations (defined only on x86-64; never call without checking
// backend_supported(Backend::avx2)).
double sum_avx2(const double *x, std::size_t n);
double dot_avx2(const double *x, const double *y, std::size_t n);
double sum_squares_avx2(const double *x, std::size_t n);
double neg_xlogx_sum_avx2(const double *x, std::size_t n);
void abs_squared_avx2(const std::complex<double> *z, double *out,
                      std::size_t n);
void cmatmul_avx2(const std::complex<double> *a, const std::complex<double> *b,
                  std::complex<double> *c, std::size_t n, std::size_t k,
                  std::size_t m);
} // namespace detail

} // namespace entroportrait::kernels

#endif // ENTROPORTRAIT_KERNELS_HPP
