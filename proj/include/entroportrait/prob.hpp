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

#ifndef ENTROPORTRAIT_PROB_HPP
#define ENTROPORTRAIT_PROB_HPP

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "entroportrait/errors.hpp"

namespace entroportrait {

/// Nonnegative components summing to 1 within 1e-9. Components in
/// [-1e-12, 0) are clamped to 0 at construction; anything more negative is
/// rejected (that is genuine negativity, not round-off).
class ProbabilityVector {
public:
  explicit ProbabilityVector(std::vector<double> components);

  std::size_t size() const { return components_.size(); }
  const std::vector<double> &components() const { return components_; }
  double operator[](std::size_t i) const { return components_[i]; }

private:
  std::vector<double> components_;
};

/// Point on the nonnegative cone; `total` caches the component sum.
class ConeVector {
public:
  explicit ConeVector(std::vector<double> components);

  std::size_t size() const { return components_.size(); }
  const std::vector<double> &components() const { return components_; }
  double total() const { return total_; }

private:
  std::vector<double> components_;
  double total_ = 0.0;
};

/// H = −Σ p ln p in nats, with 0·ln 0 = 0. Renormalizes by the exact
/// component sum before evaluating so stored round-off never leaks in.
double shannon_entropy(const ProbabilityVector &p);

/// Appends zeros up to length n; entropy is unchanged.
ProbabilityVector pad_to_length(const ProbabilityVector &p, std::size_t n);

/// result_k = p_{σ(k)}; σ must be a bijection on 0..n-1.
ProbabilityVector permute(const ProbabilityVector &p,
                          const std::vector<std::size_t> &sigma);

/// p_k = x_k / Σx; the second element is Σx. Throws zero_total if Σx ≤ 0.
std::pair<ProbabilityVector, double> normalize_cone(const ConeVector &x);

/// Uniform draw from the probability simplex (normalized exponentials),
/// deterministic per seed. Ensemble driver for the inequality sweeps.
ProbabilityVector random_probability_vector(std::size_t n, std::uint64_t seed);

} // namespace entroportrait

#endif // ENTROPORTRAIT_PROB_HPP
