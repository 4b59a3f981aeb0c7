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

#include "entroportrait/kernels.hpp"

#include <cfloat>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <stdexcept>

namespace entroportrait::kernels {

namespace detail {

double sum_scalar(const double *x, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    acc += x[i];
  return acc;
}

double dot_scalar(const double *x, const double *y, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    acc += x[i] * y[i];
  return acc;
}

double sum_squares_scalar(const double *x, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    acc += x[i] * x[i];
  return acc;
}

double neg_xlogx_sum_scalar(const double *x, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    // x·ln x -> 0 as x -> 0; subnormals contribute < 1e-305 and are skipped
    // so both backends share one contract.
    if (x[i] >= DBL_MIN)
      acc -= x[i] * std::log(x[i]);
  }
  return acc;
}

void abs_squared_scalar(const std::complex<double> *z, double *out,
                        std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double re = z[i].real();
    const double im = z[i].imag();
    out[i] = re * re + im * im;
  }
}

void cmatmul_scalar(const std::complex<double> *a,
                    const std::complex<double> *b, std::complex<double> *c,
                    std::size_t n, std::size_t k, std::size_t m) {
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      double re = 0.0, im = 0.0;
      for (std::size_t l = 0; l < k; ++l) {
        const std::complex<double> &av = a[i * k + l];
        const std::complex<double> &bv = b[l * m + j];
        re += av.real() * bv.real() - av.imag() * bv.imag();
        im += av.real() * bv.imag() + av.imag() * bv.real();
      }
      c[i * m + j] = {re, im};
    }
  }
}

} // namespace detail

namespace {

struct Vtable {
  double (*sum)(const double *, std::size_t);
  double (*dot)(const double *, const double *, std::size_t);
  double (*sum_squares)(const double *, std::size_t);
  double (*neg_xlogx_sum)(const double *, std::size_t);
  void (*abs_squared)(const std::complex<double> *, double *, std::size_t);
  void (*cmatmul)(const std::complex<double> *, const std::complex<double> *,
                  std::complex<double> *, std::size_t, std::size_t,
                  std::size_t);
};

constexpr Vtable kScalar = {
    detail::sum_scalar,         detail::dot_scalar,
    detail::sum_squares_scalar, detail::neg_xlogx_sum_scalar,
    detail::abs_squared_scalar, detail::cmatmul_scalar,
};

#if defined(__x86_64__)
constexpr Vtable kAvx2 = {
    detail::sum_avx2,         detail::dot_avx2,
    detail::sum_squares_avx2, detail::neg_xlogx_sum_avx2,
    detail::abs_squared_avx2, detail::cmatmul_avx2,
};
#endif

bool avx2_available() {
#if defined(__x86_64__)
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

struct Dispatch {
  Backend backend;
  const Vtable *table;
  Dispatch() {
    // ENTROPORTRAIT_KERNELS=scalar pins the reference path (debugging,
    // backend-equivalence runs of the whole suite).
    const char *forced = std::getenv("ENTROPORTRAIT_KERNELS");
    const bool want_scalar = forced && std::strcmp(forced, "scalar") == 0;
    if (!want_scalar && avx2_available()) {
#if defined(__x86_64__)
      backend = Backend::avx2;
      table = &kAvx2;
      return;
#endif
    }
    backend = Backend::scalar;
    table = &kScalar;
  }
};

Dispatch &dispatch() {
  static Dispatch d;
  return d;
}

} // namespace

Backend active_backend() { return dispatch().backend; }

bool backend_supported(Backend b) {
  return b == Backend::scalar || (b == Backend::avx2 && avx2_available());
}

void set_backend(Backend b) {
  if (!backend_supported(b))
    throw std::runtime_error("kernels: requested backend not supported here");
  dispatch().backend = b;
#if defined(__x86_64__)
  dispatch().table = (b == Backend::avx2) ? &kAvx2 : &kScalar;
#else
  dispatch().table = &kScalar;
#endif
}

double sum(const double *x, std::size_t n) { return dispatch().table->sum(x, n); }

double dot(const double *x, const double *y, std::size_t n) {
  return dispatch().table->dot(x, y, n);
}

double sum_squares(const double *x, std::size_t n) {
  return dispatch().table->sum_squares(x, n);
}

double neg_xlogx_sum(const double *x, std::size_t n) {
  return dispatch().table->neg_xlogx_sum(x, n);
}

void abs_squared(const std::complex<double> *z, double *out, std::size_t n) {
  dispatch().table->abs_squared(z, out, n);
}

void cmatmul(const std::complex<double> *a, const std::complex<double> *b,
             std::complex<double> *c, std::size_t n, std::size_t k,
             std::size_t m) {
  dispatch().table->cmatmul(a, b, c, n, k, m);
}

} // namespace entroportrait::kernels
