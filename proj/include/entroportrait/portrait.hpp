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

#ifndef ENTROPORTRAIT_PORTRAIT_HPP
#define ENTROPORTRAIT_PORTRAIT_HPP

#include "entroportrait/density.hpp"
#include "entroportrait/stochastic.hpp"

namespace entroportrait {

// Positive "portrait" maps compressing an n×n density matrix (n = N·M under
// a row-major bipartite coding) to its N×N and M×M marginals. The maps are
// defined for any square density matrix, composite or not, and coincide with
// the partial traces under the bipartite reading.

/// ρ(1): column j is read off the first N components of M₁₂·R_j, where the
/// vectors R_j collect the entries (R_j)_{k,α} = ρ_{kα,jα} (no sum over α).
DensityMatrix portrait_first(const DensityMatrix &rho, const Factorization &f);

/// ρ(2): the sum of the N diagonal M×M blocks of ρ. Also reachable through
/// swap-matrix conjugation plus portrait_first with the factors exchanged.
DensityMatrix portrait_second(const DensityMatrix &rho, const Factorization &f);

enum class PortraitSide { first, second };

/// Independent double-index-sum route (plain partial trace); the check
/// against portrait_first/portrait_second keeps the R_j/M₁₂ construction
/// honest. Returns the raw matrix without density validation.
ComplexMatrix partial_trace_oracle(const DensityMatrix &rho,
                                   const Factorization &f, PortraitSide side);

/// Leading-block embedding into dimension n; spectrum (hence entropy)
/// unchanged.
DensityMatrix embed_padded(const DensityMatrix &small, std::size_t n);

struct PortraitPair {
  DensityMatrix first;         // N×N
  DensityMatrix second;        // M×M
  DensityMatrix first_padded;  // n×n, leading block = first
  DensityMatrix second_padded; // n×n, leading block = second
  Factorization factorization;
};

PortraitPair portraits(const DensityMatrix &rho, const Factorization &f);

struct QuantumReport {
  double s_joint;
  double s_first;
  double s_second;
  double information; // s_first + s_second - s_joint
  Factorization factorization;
};

QuantumReport quantum_subadditivity_report(const DensityMatrix &rho,
                                           const Factorization &f);

/// Relabels basis indices by σ (conjugation by the permutation matrix of σ,
/// so S_joint is untouched), then reports.
QuantumReport permuted_portraits(const DensityMatrix &rho,
                                 const Factorization &f,
                                 const std::vector<std::size_t> &sigma);

/// The j=2 qudit treatment: a 5×5 state is padded to 6×6 and mapped with
/// (N,M) = (3,2); rows/columns 6 of the padded matrix are zero, so the
/// portraits take closed forms in the original entries.
QuantumReport qudit_j2_example(const DensityMatrix &rho5);

} // namespace entroportrait

#endif // ENTROPORTRAIT_PORTRAIT_HPP
