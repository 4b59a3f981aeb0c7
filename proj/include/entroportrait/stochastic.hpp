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

#ifndef ENTROPORTRAIT_STOCHASTIC_HPP
#define ENTROPORTRAIT_STOCHASTIC_HPP

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "entroportrait/linalg.hpp"
#include "entroportrait/prob.hpp"

namespace entroportrait {

/// Bipartite index coding n = first·second. Linear indices are ROW-MAJOR:
/// pair (k, j) with k < first, j < second sits at k·second + j.
/// Canonical enumeration keeps first ≤ second, but the coding itself (and
/// every portrait map) is valid for either order.
struct Factorization {
  std::size_t first;  // N
  std::size_t second; // M

  Factorization(std::size_t n_first, std::size_t m_second);

  std::size_t n() const { return first * second; }
  Factorization swapped() const { return {second, first}; }
};

/// All nontrivial divisor pairs (N, M), N·M = n, 2 ≤ N ≤ M, ascending N.
/// With include_trivial the pair (1, n) is prepended.
std::vector<Factorization> factorizations(std::size_t n,
                                          bool include_trivial = false);

/// Smallest n' ≥ n admitting a nontrivial factorization (pad target for
/// prime and tiny sizes; 5 → 6, 7 → 8, composite n → n).
std::size_t next_factorable(std::size_t n);

/// n×n matrix of exact zeros and ones with unit column sums.
class StochasticMatrix {
public:
  /// Row k has ones on columns k·M .. k·M+M-1 (k < N); rows N..n-1 are zero.
  /// Applying it to p yields the first marginal padded with zeros.
  static StochasticMatrix m12(const Factorization &f);

  /// Row j has ones on columns j, M+j, ..., (N-1)M+j (j < M); rows M..n-1
  /// are zero. Applying it to p yields the second marginal padded with zeros.
  static StochasticMatrix m21(const Factorization &f);

  std::size_t dim() const { return matrix_.rows; }
  const RealMatrix &matrix() const { return matrix_; }

  std::vector<double> apply(const std::vector<double> &v) const;
  std::vector<Complex> apply(const std::vector<Complex> &v) const;

private:
  explicit StochasticMatrix(RealMatrix m) : matrix_(std::move(m)) {}
  RealMatrix matrix_;
};

struct SubadditivityReport {
  double h_joint;
  double h_first;
  double h_second;
  double information; // h_first + h_second - h_joint
  Factorization factorization;
};

/// Both marginals of p under the coding f, returned at full length n with
/// trailing zeros. Computed through the canonical stochastic matrices.
std::pair<ProbabilityVector, ProbabilityVector>
marginals(const ProbabilityVector &p, const Factorization &f);

SubadditivityReport subadditivity_report(const ProbabilityVector &p,
                                         const Factorization &f);

/// I_x = −(M₁₂x)·ln(M₁₂x) − (M₂₁x)·ln(M₂₁x) + x·ln x + (Σx)·ln(Σx).
/// Equals (Σx)·I_p(x/Σx); nonnegative up to round-off.
double cone_information(const ConeVector &x, const Factorization &f);

struct PermutationSweep {
  std::size_t count = 0;
  double min_information = 0.0;
  double max_information = 0.0;
  double mean_information = 0.0;
  std::vector<std::size_t> argmin; // permutation attaining the minimum
  std::vector<std::size_t> argmax;
};

/// Information statistics over all n! relabelings (n ≤ 8 only).
PermutationSweep permutation_sweep_exhaustive(const ProbabilityVector &p,
                                              const Factorization &f);

/// Information statistics over `count` seeded uniform random permutations.
PermutationSweep permutation_sweep_sampled(const ProbabilityVector &p,
                                           const Factorization &f,
                                           std::size_t count,
                                           std::uint64_t seed);

} // namespace entroportrait

#endif // ENTROPORTRAIT_STOCHASTIC_HPP
