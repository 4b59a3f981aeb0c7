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

#if defined(__x86_64__)

#include <cfloat>
#include <immintrin.h>

namespace entroportrait::kernels::detail {

namespace {

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

// Load mask for the final r (< 4) lanes.
inline __m256i tail_mask(std::size_t r) {
  return _mm256_cmpgt_epi64(_mm256_set1_epi64x(static_cast<long long>(r)),
                            _mm256_setr_epi64x(0, 1, 2, 3));
}

// fdlibm-style natural log, valid for normal positive lanes; other lanes
// must be masked by the caller. Matches std::log to within ~1 ulp.
inline __m256d vlog_pd(__m256d x) {
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d two = _mm256_set1_pd(2.0);
  const __m256d half = _mm256_set1_pd(0.5);
  const __m256d ln2_hi = _mm256_set1_pd(6.93147180369123816490e-01);
  const __m256d ln2_lo = _mm256_set1_pd(1.90821492927058770002e-10);
  const __m256d lg1 = _mm256_set1_pd(6.666666666666735130e-01);
  const __m256d lg2 = _mm256_set1_pd(3.999999999940941908e-01);
  const __m256d lg3 = _mm256_set1_pd(2.857142874366239149e-01);
  const __m256d lg4 = _mm256_set1_pd(2.222219843214978396e-01);
  const __m256d lg5 = _mm256_set1_pd(1.818357216161805012e-01);
  const __m256d lg6 = _mm256_set1_pd(1.531383769920937332e-01);
  const __m256d lg7 = _mm256_set1_pd(1.479819860511658591e-01);

  // Reduce x = m·2^k with m in [sqrt(1/2), sqrt(2)).
  __m256i bits = _mm256_castpd_si256(x);
  bits = _mm256_add_epi64(bits, _mm256_set1_epi64x(0x00095F6200000000LL));
  __m256i ki =
      _mm256_sub_epi64(_mm256_srli_epi64(bits, 52), _mm256_set1_epi64x(0x3FF));
  // int64 -> double via the 2^52+2^51 bias trick (|k| << 2^51).
  __m256i kb = _mm256_add_epi64(ki, _mm256_set1_epi64x(0x4338000000000000LL));
  __m256d dk = _mm256_sub_pd(_mm256_castsi256_pd(kb),
                             _mm256_set1_pd(6755399441055744.0));
  __m256i mbits = _mm256_add_epi64(
      _mm256_and_si256(bits, _mm256_set1_epi64x(0x000FFFFFFFFFFFFFLL)),
      _mm256_set1_epi64x(0x3FE6A09E00000000LL));
  __m256d m = _mm256_castsi256_pd(mbits);

  __m256d f = _mm256_sub_pd(m, one);
  __m256d hfsq = _mm256_mul_pd(half, _mm256_mul_pd(f, f));
  __m256d s = _mm256_div_pd(f, _mm256_add_pd(two, f));
  __m256d z = _mm256_mul_pd(s, s);
  __m256d w = _mm256_mul_pd(z, z);
  __m256d t1 =
      _mm256_mul_pd(w, _mm256_fmadd_pd(w, _mm256_fmadd_pd(w, lg6, lg4), lg2));
  __m256d t2 = _mm256_mul_pd(
      z, _mm256_fmadd_pd(
             w, _mm256_fmadd_pd(w, _mm256_fmadd_pd(w, lg7, lg5), lg3), lg1));
  __m256d r = _mm256_add_pd(t2, t1);

  // s*(hfsq+R) + dk*ln2_lo - hfsq + f + dk*ln2_hi
  __m256d out = _mm256_mul_pd(s, _mm256_add_pd(hfsq, r));
  out = _mm256_fmadd_pd(dk, ln2_lo, out);
  out = _mm256_sub_pd(out, hfsq);
  out = _mm256_add_pd(out, f);
  out = _mm256_fmadd_pd(dk, ln2_hi, out);
  return out;
}

} // namespace

double sum_avx2(const double *x, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    acc = _mm256_add_pd(acc, _mm256_loadu_pd(x + i));
  if (i < n)
    acc = _mm256_add_pd(acc, _mm256_maskload_pd(x + i, tail_mask(n - i)));
  return hsum(acc);
}

double dot_avx2(const double *x, const double *y, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    acc = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc);
  if (i < n) {
    __m256i mask = tail_mask(n - i);
    acc = _mm256_fmadd_pd(_mm256_maskload_pd(x + i, mask),
                          _mm256_maskload_pd(y + i, mask), acc);
  }
  return hsum(acc);
}

double sum_squares_avx2(const double *x, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d v = _mm256_loadu_pd(x + i);
    acc = _mm256_fmadd_pd(v, v, acc);
  }
  if (i < n) {
    __m256d v = _mm256_maskload_pd(x + i, tail_mask(n - i));
    acc = _mm256_fmadd_pd(v, v, acc);
  }
  return hsum(acc);
}

double neg_xlogx_sum_avx2(const double *x, std::size_t n) {
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d tiny = _mm256_set1_pd(DBL_MIN);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  auto step = [&](__m256d v) {
    // Lanes below DBL_MIN (zeros, padding, clamped negatives) contribute 0:
    // log runs on 1.0 there and v·log(1)=±0.
    __m256d live = _mm256_cmp_pd(v, tiny, _CMP_GE_OQ);
    __m256d safe = _mm256_blendv_pd(one, v, live);
    acc = _mm256_fnmadd_pd(v, vlog_pd(safe), acc);
  };
  for (; i + 4 <= n; i += 4)
    step(_mm256_loadu_pd(x + i));
  if (i < n)
    step(_mm256_maskload_pd(x + i, tail_mask(n - i)));
  return hsum(acc);
}

void abs_squared_avx2(const std::complex<double> *z, double *out,
                      std::size_t n) {
  const double *p = reinterpret_cast<const double *>(z);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d a = _mm256_loadu_pd(p + 2 * i);     // z0.re z0.im z1.re z1.im
    __m256d b = _mm256_loadu_pd(p + 2 * i + 4); // z2 z3
    __m256d h = _mm256_hadd_pd(_mm256_mul_pd(a, a), _mm256_mul_pd(b, b));
    // hadd interleaves 128-bit lanes: [|z0|²,|z2|²,|z1|²,|z3|²] -> reorder
    _mm256_storeu_pd(out + i, _mm256_permute4x64_pd(h, _MM_SHUFFLE(3, 1, 2, 0)));
  }
  for (; i < n; ++i) {
    const double re = p[2 * i], im = p[2 * i + 1];
    out[i] = re * re + im * im;
  }
}

void cmatmul_avx2(const std::complex<double> *a, const std::complex<double> *b,
                  std::complex<double> *c, std::size_t n, std::size_t k,
                  std::size_t m) {
  const double *bp = reinterpret_cast<const double *>(b);
  double *cp = reinterpret_cast<double *>(c);
  for (std::size_t i = 0; i < n; ++i) {
    const double *ap = reinterpret_cast<const double *>(a + i * k);
    std::size_t j = 0;
    for (; j + 2 <= m; j += 2) { // two output columns per vector
      __m256d acc = _mm256_setzero_pd();
      for (std::size_t l = 0; l < k; ++l) {
        __m256d ar = _mm256_broadcast_sd(ap + 2 * l);
        __m256d ai = _mm256_broadcast_sd(ap + 2 * l + 1);
        __m256d bv = _mm256_loadu_pd(bp + 2 * (l * m + j));
        __m256d bs = _mm256_permute_pd(bv, 0x5); // swap re/im per complex
        acc = _mm256_add_pd(acc,
                            _mm256_fmaddsub_pd(ar, bv, _mm256_mul_pd(ai, bs)));
      }
      _mm256_storeu_pd(cp + 2 * (i * m + j), acc);
    }
    for (; j < m; ++j) {
      double re = 0.0, im = 0.0;
      for (std::size_t l = 0; l < k; ++l) {
        const double ar = ap[2 * l], ai = ap[2 * l + 1];
        const double br = bp[2 * (l * m + j)], bi = bp[2 * (l * m + j) + 1];
        re += ar * br - ai * bi;
        im += ar * bi + ai * br;
      }
      cp[2 * (i * m + j)] = re;
      cp[2 * (i * m + j) + 1] = im;
    }
  }
}

} // namespace entroportrait::kernels::detail

#endif // __x86_64__
