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

#include "entroportrait/prob.hpp"

#include <cmath>

#include "entroportrait/kernels.hpp"
#include "entroportrait/linalg.hpp"
#include "entroportrait/rng.hpp"

namespace entroportrait {

namespace {
constexpr double kNegClamp = -1e-12;
constexpr double kSumTol = 1e-9;
} // namespace

ProbabilityVector::ProbabilityVector(std::vector<double> components)
    : components_(std::move(components)) {
  if (components_.empty())
    throw Error(ErrorCode::invalid_argument, "probability vector is empty");
  for (std::size_t i = 0; i < components_.size(); ++i) {
    double &c = components_[i];
    if (!std::isfinite(c))
      throw Error(ErrorCode::invalid_argument,
                  "component " + std::to_string(i) + " is not finite");
    if (c < kNegClamp)
      throw Error(ErrorCode::invalid_argument,
                  "component " + std::to_string(i) + " is negative (" +
                      std::to_string(c) + ")");
    if (c < 0.0)
      c = 0.0;
  }
  const double total = kernels::sum(components_.data(), components_.size());
  if (std::abs(total - 1.0) > kSumTol)
    throw Error(ErrorCode::invalid_argument,
                "components sum to " + std::to_string(total) + ", not 1");
}

ConeVector::ConeVector(std::vector<double> components)
    : components_(std::move(components)) {
  if (components_.empty())
    throw Error(ErrorCode::invalid_argument, "cone vector is empty");
  for (std::size_t i = 0; i < components_.size(); ++i) {
    double &c = components_[i];
    if (!std::isfinite(c))
      throw Error(ErrorCode::invalid_argument,
                  "component " + std::to_string(i) + " is not finite");
    if (c < kNegClamp)
      throw Error(ErrorCode::invalid_argument,
                  "component " + std::to_string(i) + " is negative (" +
                      std::to_string(c) + ")");
    if (c < 0.0)
      c = 0.0;
  }
  total_ = kernels::sum(components_.data(), components_.size());
}

double shannon_entropy(const ProbabilityVector &p) {
  // -Σ (p/S) ln(p/S) = (1/S)·(-Σ p ln p) + ln S with S the exact sum.
  const double s = kernels::sum(p.components().data(), p.size());
  const double raw = kernels::neg_xlogx_sum(p.components().data(), p.size());
  return raw / s + std::log(s);
}

ProbabilityVector pad_to_length(const ProbabilityVector &p, std::size_t n) {
  if (n < p.size())
    throw Error(ErrorCode::too_short,
                "cannot pad length " + std::to_string(p.size()) + " down to " +
                    std::to_string(n));
  std::vector<double> out = p.components();
  out.resize(n, 0.0);
  return ProbabilityVector(std::move(out));
}

ProbabilityVector permute(const ProbabilityVector &p,
                          const std::vector<std::size_t> &sigma) {
  check_permutation(sigma, p.size());
  std::vector<double> out(p.size());
  for (std::size_t k = 0; k < p.size(); ++k)
    out[k] = p[sigma[k]];
  return ProbabilityVector(std::move(out));
}

std::pair<ProbabilityVector, double> normalize_cone(const ConeVector &x) {
  const double total = x.total();
  if (total <= 0.0)
    throw Error(ErrorCode::zero_total, "cone vector has zero total");
  std::vector<double> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    out[i] = x.components()[i] / total;
  return {ProbabilityVector(std::move(out)), total};
}

ProbabilityVector random_probability_vector(std::size_t n, std::uint64_t seed) {
  if (n < 1)
    throw Error(ErrorCode::invalid_argument, "vector length must be positive");
  Rng rng(seed);
  std::vector<double> v(n);
  double total = 0.0;
  for (double &c : v) {
    c = -std::log(std::max(rng.uniform(), 0x1.0p-53));
    total += c;
  }
  for (double &c : v)
    c /= total;
  return ProbabilityVector(std::move(v));
}

} // namespace entroportrait
