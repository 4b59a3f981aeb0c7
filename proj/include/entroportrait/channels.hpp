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

#ifndef ENTROPORTRAIT_CHANNELS_HPP
#define ENTROPORTRAIT_CHANNELS_HPP

#include <cstdint>
#include <optional>

#include "entroportrait/density.hpp"
#include "entroportrait/stochastic.hpp"

namespace entroportrait {

/// 1-based inclusive index window [first, last].
struct IndexRange {
  std::size_t first;
  std::size_t last;
};

struct EscortParams {
  double order = 1.0;                // s ≥ 1
  std::optional<IndexRange> window;  // defaults to the full range
};

/// Π_k = p_k^s / Σ_range p^s over the window (length last-first+1). The
/// identity map for s = 1 on the full range. Powers are rescaled by the
/// window maximum first, so large s cannot underflow the denominator; the
/// error case is a window carrying no probability mass at all.
ProbabilityVector escort_map(const ProbabilityVector &p,
                             const EscortParams &params);

/// P(k|j) = p_{kj} / Σ_k p_{kj} under the row-major coding; j is 1-based.
ProbabilityVector bayes_conditional(const ProbabilityVector &p,
                                    const Factorization &f, std::size_t j);

/// ρ → ρ^s / Tr ρ^s, computed spectrally (eigenvectors kept, eigenvalues
/// escort-mapped); purity never decreases, s = 1 is the identity.
DensityMatrix power_channel(const DensityMatrix &rho, double s);

/// Leading m×m block rescaled by its diagonal mass (the quantum Bayes
/// analog).
DensityMatrix truncation_channel(const DensityMatrix &rho, std::size_t m);

/// R = Σ_s w_s · ρ^s/Tr ρ^s with w over s = 1..len(w).
DensityMatrix convex_power_channel(const DensityMatrix &rho,
                                   const ProbabilityVector &weights);

/// [H(Π^(1)), ..., H(Π^(s_max))]; nonincreasing.
std::vector<double> escort_entropy_chain(const ProbabilityVector &p,
                                         std::size_t s_max);

/// [S(ρ), S(ρ²/Trρ²), ...]; nonincreasing, equals the escort chain of the
/// spectrum.
std::vector<double> quantum_power_entropy_chain(const DensityMatrix &rho,
                                                std::size_t s_max);

/// Minimum eigenvalue of the partial transpose on the second factor;
/// negative certifies entanglement for 2×2 and 2×3 systems.
double ppt_min_eigenvalue(const DensityMatrix &rho, const Factorization &f);

struct XStateHit {
  std::uint64_t trial;
  double min_eig_before;
  double min_eig_after;
};

struct XSearchReport {
  std::uint64_t trials = 0;
  double order = 2.0;
  std::uint64_t seed = 0;
  std::vector<XStateHit> found; // post-channel NPT cases, by trial index
};

/// Samples seeded separable (PPT) two-qubit X-states, pushes each through
/// the power channel and records any that come out NPT. Exploratory: hits
/// are reported with replayable trial indices, never asserted to exist.
XSearchReport xstate_entanglement_search(std::uint64_t trials,
                                         std::uint64_t seed, double s);

/// The sampler behind the search, exposed for tests: separable two-qubit
/// X-state, deterministic per seed.
DensityMatrix random_separable_xstate(std::uint64_t seed);

} // namespace entroportrait

#endif // ENTROPORTRAIT_CHANNELS_HPP
