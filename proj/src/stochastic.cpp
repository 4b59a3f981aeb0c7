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

#include "entroportrait/stochastic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "entroportrait/kernels.hpp"
#include "entroportrait/rng.hpp"

namespace entroportrait {

Factorization::Factorization(std::size_t n_first, std::size_t m_second)
    : first(n_first), second(m_second) {
  if (first < 1 || second < 1)
    throw Error(ErrorCode::invalid_argument,
                "factorization factors must be positive");
}

std::vector<Factorization> factorizations(std::size_t n, bool include_trivial) {
  if (n < 2)
    throw Error(ErrorCode::invalid_argument,
                "factorizations need n >= 2, got " + std::to_string(n));
  std::vector<Factorization> out;
  if (include_trivial)
    out.emplace_back(1, n);
  for (std::size_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      out.emplace_back(d, n / d);
  return out;
}

std::size_t next_factorable(std::size_t n) {
  std::size_t m = std::max<std::size_t>(n, 4);
  while (factorizations(m).empty())
    ++m;
  return m;
}

StochasticMatrix StochasticMatrix::m12(const Factorization &f) {
  const std::size_t n = f.n();
  RealMatrix m(n, n);
  for (std::size_t k = 0; k < f.first; ++k)
    for (std::size_t j = 0; j < f.second; ++j)
      m.at(k, k * f.second + j) = 1.0;
  return StochasticMatrix(std::move(m));
}

StochasticMatrix StochasticMatrix::m21(const Factorization &f) {
  const std::size_t n = f.n();
  RealMatrix m(n, n);
  for (std::size_t j = 0; j < f.second; ++j)
    for (std::size_t k = 0; k < f.first; ++k)
      m.at(j, k * f.second + j) = 1.0;
  return StochasticMatrix(std::move(m));
}

std::vector<double> StochasticMatrix::apply(const std::vector<double> &v) const {
  return matrix_.apply(v);
}

std::vector<Complex> StochasticMatrix::apply(const std::vector<Complex> &v) const {
  const std::size_t n = dim();
  if (v.size() != n)
    throw Error(ErrorCode::length_mismatch, "matrix-vector length mismatch");
  std::vector<Complex> out(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    Complex acc = 0.0;
    for (std::size_t j = 0; j < n; ++j)
      if (matrix_.at(i, j) != 0.0)
        acc += v[j];
    out[i] = acc;
  }
  return out;
}

std::pair<ProbabilityVector, ProbabilityVector>
marginals(const ProbabilityVector &p, const Factorization &f) {
  if (p.size() != f.n())
    throw Error(ErrorCode::length_mismatch,
                "vector length " + std::to_string(p.size()) +
                    " does not match factorization n = " +
                    std::to_string(f.n()));
  const auto first = StochasticMatrix::m12(f).apply(p.components());
  const auto second = StochasticMatrix::m21(f).apply(p.components());
  return {ProbabilityVector(first), ProbabilityVector(second)};
}

SubadditivityReport subadditivity_report(const ProbabilityVector &p,
                                         const Factorization &f) {
  const auto [first, second] = marginals(p, f);
  const double h_joint = shannon_entropy(p);
  const double h_first = shannon_entropy(first);
  const double h_second = shannon_entropy(second);
  return SubadditivityReport{h_joint, h_first, h_second,
                             h_first + h_second - h_joint, f};
}

double cone_information(const ConeVector &x, const Factorization &f) {
  if (x.size() != f.n())
    throw Error(ErrorCode::length_mismatch,
                "cone vector length does not match factorization");
  const double total = x.total();
  if (total <= 0.0)
    throw Error(ErrorCode::zero_total, "cone vector has zero total");
  const auto first = StochasticMatrix::m12(f).apply(x.components());
  const auto second = StochasticMatrix::m21(f).apply(x.components());
  const std::size_t n = x.size();
  const double h_first = kernels::neg_xlogx_sum(first.data(), n);
  const double h_second = kernels::neg_xlogx_sum(second.data(), n);
  const double h_joint = kernels::neg_xlogx_sum(x.components().data(), n);
  return h_first + h_second - h_joint + total * std::log(total);
}

namespace {

PermutationSweep finish_sweep(std::size_t count, double min_info,
                              double max_info, double sum_info,
                              std::vector<std::size_t> argmin,
                              std::vector<std::size_t> argmax) {
  PermutationSweep s;
  s.count = count;
  s.min_information = min_info;
  s.max_information = max_info;
  s.mean_information = sum_info / static_cast<double>(count);
  s.argmin = std::move(argmin);
  s.argmax = std::move(argmax);
  return s;
}

} // namespace

PermutationSweep permutation_sweep_exhaustive(const ProbabilityVector &p,
                                              const Factorization &f) {
  const std::size_t n = p.size();
  if (n > 8)
    throw Error(ErrorCode::too_large_for_exhaustive,
                "exhaustive sweep limited to n <= 8, got " + std::to_string(n));
  std::vector<std::size_t> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);

  double min_info = 0.0, max_info = 0.0, sum_info = 0.0;
  std::vector<std::size_t> argmin, argmax;
  std::size_t count = 0;
  do {
    const double info = subadditivity_report(permute(p, sigma), f).information;
    if (count == 0 || info < min_info) {
      min_info = info;
      argmin = sigma;
    }
    if (count == 0 || info > max_info) {
      max_info = info;
      argmax = sigma;
    }
    sum_info += info;
    ++count;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return finish_sweep(count, min_info, max_info, sum_info, std::move(argmin),
                      std::move(argmax));
}

PermutationSweep permutation_sweep_sampled(const ProbabilityVector &p,
                                           const Factorization &f,
                                           std::size_t count,
                                           std::uint64_t seed) {
  if (count == 0)
    throw Error(ErrorCode::invalid_argument, "sampled sweep needs count >= 1");
  const std::size_t n = p.size();
  double min_info = 0.0, max_info = 0.0, sum_info = 0.0;
  std::vector<std::size_t> argmin, argmax;
  for (std::size_t t = 0; t < count; ++t) {
    Rng rng(derive_seed(seed, t));
    std::vector<std::size_t> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 0);
    for (std::size_t i = n - 1; i > 0; --i)
      std::swap(sigma[i], sigma[rng.below(i + 1)]);
    const double info = subadditivity_report(permute(p, sigma), f).information;
    if (t == 0 || info < min_info) {
      min_info = info;
      argmin = sigma;
    }
    if (t == 0 || info > max_info) {
      max_info = info;
      argmax = sigma;
    }
    sum_info += info;
  }
  return finish_sweep(count, min_info, max_info, sum_info, std::move(argmin),
                      std::move(argmax));
}

} // namespace entroportrait
