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

#include "entroportrait/channels.hpp"

#include <algorithm>
#include <cmath>

#include "entroportrait/kernels.hpp"
#include "entroportrait/rng.hpp"

namespace entroportrait {

ProbabilityVector escort_map(const ProbabilityVector &p,
                             const EscortParams &params) {
  if (params.order < 1.0)
    throw Error(ErrorCode::invalid_argument,
                "escort order must satisfy s >= 1");
  std::size_t begin = 0, end = p.size(); // half-open, 0-based
  if (params.window) {
    if (params.window->first < 1 || params.window->first > params.window->last ||
        params.window->last > p.size())
      throw Error(ErrorCode::invalid_argument, "escort window out of range");
    begin = params.window->first - 1;
    end = params.window->last;
  }
  const std::size_t len = end - begin;
  double peak = 0.0;
  for (std::size_t k = begin; k < end; ++k)
    peak = std::max(peak, p[k]);
  if (peak <= 0.0)
    throw Error(ErrorCode::zero_denominator,
                "escort window carries no probability mass");

  std::vector<double> powered(len);
  for (std::size_t k = 0; k < len; ++k)
    powered[k] = std::pow(p[begin + k] / peak, params.order);
  const double denom = kernels::sum(powered.data(), len);
  for (double &v : powered)
    v /= denom;
  return ProbabilityVector(std::move(powered));
}

ProbabilityVector bayes_conditional(const ProbabilityVector &p,
                                    const Factorization &f, std::size_t j) {
  if (p.size() != f.n())
    throw Error(ErrorCode::length_mismatch,
                "vector length does not match factorization");
  if (j < 1 || j > f.second)
    throw Error(ErrorCode::invalid_argument,
                "conditioning index j must lie in 1.." +
                    std::to_string(f.second));
  std::vector<double> column(f.first);
  for (std::size_t k = 0; k < f.first; ++k)
    column[k] = p[k * f.second + (j - 1)];
  const double mass = kernels::sum(column.data(), column.size());
  if (mass <= 1e-12)
    throw Error(ErrorCode::zero_column,
                "outcome j = " + std::to_string(j) + " has zero probability");
  for (double &v : column)
    v /= mass;
  return ProbabilityVector(std::move(column));
}

DensityMatrix power_channel(const DensityMatrix &rho, double s) {
  if (s < 1.0)
    throw Error(ErrorCode::invalid_argument, "power order must satisfy s >= 1");
  const SpectralDecomposition dec = spectral_decompose(rho);
  const ProbabilityVector escorted =
      escort_map(dec.eigen_probs, EscortParams{s, std::nullopt});
  const std::size_t n = rho.dim();
  const ComplexMatrix &v = dec.basis.matrix();
  ComplexMatrix scaled(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      scaled(i, j) = v(i, j) * escorted[j];
  return DensityMatrix(scaled * v.adjoint());
}

DensityMatrix truncation_channel(const DensityMatrix &rho, std::size_t m) {
  if (m < 1 || m >= rho.dim())
    throw Error(ErrorCode::invalid_argument,
                "truncation size must satisfy 1 <= m < dim");
  double mass = 0.0;
  for (std::size_t k = 0; k < m; ++k)
    mass += rho.matrix()(k, k).real();
  if (mass <= 1e-12)
    throw Error(ErrorCode::zero_probability_block,
                "leading " + std::to_string(m) +
                    " levels carry no probability mass");
  ComplexMatrix out(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      out(i, j) = rho.matrix()(i, j) / mass;
  return DensityMatrix(out);
}

DensityMatrix convex_power_channel(const DensityMatrix &rho,
                                   const ProbabilityVector &weights) {
  const std::size_t n = rho.dim();
  ComplexMatrix acc(n, n);
  for (std::size_t s = 0; s < weights.size(); ++s) {
    if (weights[s] == 0.0)
      continue;
    acc = acc + power_channel(rho, static_cast<double>(s + 1)).matrix() *
                    weights[s];
  }
  return DensityMatrix(acc);
}

std::vector<double> escort_entropy_chain(const ProbabilityVector &p,
                                         std::size_t s_max) {
  if (s_max < 2)
    throw Error(ErrorCode::invalid_argument, "chain needs s_max >= 2");
  std::vector<double> chain;
  chain.reserve(s_max);
  for (std::size_t s = 1; s <= s_max; ++s)
    chain.push_back(shannon_entropy(
        escort_map(p, EscortParams{static_cast<double>(s), std::nullopt})));
  return chain;
}

std::vector<double> quantum_power_entropy_chain(const DensityMatrix &rho,
                                                std::size_t s_max) {
  if (s_max < 2)
    throw Error(ErrorCode::invalid_argument, "chain needs s_max >= 2");
  std::vector<double> chain;
  chain.reserve(s_max);
  for (std::size_t s = 1; s <= s_max; ++s)
    chain.push_back(
        von_neumann_entropy(power_channel(rho, static_cast<double>(s))));
  return chain;
}

double ppt_min_eigenvalue(const DensityMatrix &rho, const Factorization &f) {
  if (rho.dim() != f.n())
    throw Error(ErrorCode::dimension_mismatch,
                "density matrix dim does not match factorization");
  const std::size_t n_first = f.first;
  const std::size_t m_second = f.second;
  const ComplexMatrix &m = rho.matrix();
  ComplexMatrix pt(rho.dim(), rho.dim());
  // Transpose the second tensor factor only.
  for (std::size_t k = 0; k < n_first; ++k)
    for (std::size_t a = 0; a < m_second; ++a)
      for (std::size_t kp = 0; kp < n_first; ++kp)
        for (std::size_t b = 0; b < m_second; ++b)
          pt(k * m_second + a, kp * m_second + b) =
              m(k * m_second + b, kp * m_second + a);
  return hermitian_eig(pt).eigenvalues.back();
}

DensityMatrix random_separable_xstate(std::uint64_t seed) {
  Rng rng(seed);
  // Diagonal from exponential draws, corner coherences bounded by both the
  // PSD and the PPT constraint (|ρ14|² ≤ ad ∧ bc, |ρ23|² ≤ bc ∧ ad).
  double d[4];
  double total = 0.0;
  for (double &v : d) {
    v = -std::log(std::max(rng.uniform(), 0x1.0p-53));
    total += v;
  }
  for (double &v : d)
    v /= total;
  const double bound = std::sqrt(std::min(d[0] * d[3], d[1] * d[2]));
  const double r14 = rng.uniform() * bound;
  const double r23 = rng.uniform() * bound;
  const double ph14 = 2.0 * 3.14159265358979323846 * rng.uniform();
  const double ph23 = 2.0 * 3.14159265358979323846 * rng.uniform();
  ComplexMatrix m(4, 4);
  m(0, 0) = d[0];
  m(1, 1) = d[1];
  m(2, 2) = d[2];
  m(3, 3) = d[3];
  m(0, 3) = std::polar(r14, ph14);
  m(3, 0) = std::conj(m(0, 3));
  m(1, 2) = std::polar(r23, ph23);
  m(2, 1) = std::conj(m(1, 2));
  return DensityMatrix(m);
}

XSearchReport xstate_entanglement_search(std::uint64_t trials,
                                         std::uint64_t seed, double s) {
  if (trials < 1)
    throw Error(ErrorCode::invalid_argument, "search needs trials >= 1");
  const Factorization two_qubits(2, 2);
  XSearchReport report;
  report.trials = trials;
  report.order = s;
  report.seed = seed;
  for (std::uint64_t t = 0; t < trials; ++t) {
    DensityMatrix rho = random_separable_xstate(derive_seed(seed, t));
    double before = ppt_min_eigenvalue(rho, two_qubits);
    for (std::uint64_t attempt = 1; before < 0.0; ++attempt) {
      // The sampler is PPT by construction; rejection guards round-off.
      rho = random_separable_xstate(derive_seed(seed, t + (attempt << 32)));
      before = ppt_min_eigenvalue(rho, two_qubits);
    }
    const double after = ppt_min_eigenvalue(power_channel(rho, s), two_qubits);
    if (after < -1e-8)
      report.found.push_back(XStateHit{t, before, after});
  }
  return report;
}

} // namespace entroportrait
