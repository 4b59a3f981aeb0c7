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

#include "entroportrait/portrait.hpp"

namespace entroportrait {

namespace {

void require_dim(const DensityMatrix &rho, const Factorization &f) {
  if (rho.dim() != f.n())
    throw Error(ErrorCode::dimension_mismatch,
                "density matrix dim " + std::to_string(rho.dim()) +
                    " does not match factorization n = " +
                    std::to_string(f.n()));
}

} // namespace

DensityMatrix portrait_first(const DensityMatrix &rho, const Factorization &f) {
  require_dim(rho, f);
  const std::size_t n_first = f.first;
  const std::size_t m_second = f.second;
  const ComplexMatrix &m = rho.matrix();
  const StochasticMatrix m12 = StochasticMatrix::m12(f);

  ComplexMatrix out(n_first, n_first);
  for (std::size_t j = 0; j < n_first; ++j) {
    // (R_j)_{k,α} = ρ_{kα,jα}, row-major pair coding kα -> k·M + α.
    std::vector<Complex> r(f.n());
    for (std::size_t k = 0; k < n_first; ++k)
      for (std::size_t alpha = 0; alpha < m_second; ++alpha)
        r[k * m_second + alpha] =
            m(k * m_second + alpha, j * m_second + alpha);
    const std::vector<Complex> mapped = m12.apply(r);
    for (std::size_t k = 0; k < n_first; ++k)
      out(k, j) = mapped[k];
  }
  return DensityMatrix(out);
}

DensityMatrix portrait_second(const DensityMatrix &rho, const Factorization &f) {
  require_dim(rho, f);
  const std::size_t m_second = f.second;
  const ComplexMatrix &m = rho.matrix();
  ComplexMatrix out(m_second, m_second);
  for (std::size_t k = 0; k < f.first; ++k)
    for (std::size_t a = 0; a < m_second; ++a)
      for (std::size_t b = 0; b < m_second; ++b)
        out(a, b) += m(k * m_second + a, k * m_second + b);
  return DensityMatrix(out);
}

ComplexMatrix partial_trace_oracle(const DensityMatrix &rho,
                                   const Factorization &f, PortraitSide side) {
  require_dim(rho, f);
  const std::size_t n_first = f.first;
  const std::size_t m_second = f.second;
  const ComplexMatrix &m = rho.matrix();
  if (side == PortraitSide::first) {
    ComplexMatrix out(n_first, n_first);
    for (std::size_t k = 0; k < n_first; ++k)
      for (std::size_t kp = 0; kp < n_first; ++kp) {
        Complex acc = 0.0;
        for (std::size_t alpha = 0; alpha < m_second; ++alpha)
          acc += m(k * m_second + alpha, kp * m_second + alpha);
        out(k, kp) = acc;
      }
    return out;
  }
  ComplexMatrix out(m_second, m_second);
  for (std::size_t a = 0; a < m_second; ++a)
    for (std::size_t b = 0; b < m_second; ++b) {
      Complex acc = 0.0;
      for (std::size_t k = 0; k < n_first; ++k)
        acc += m(k * m_second + a, k * m_second + b);
      out(a, b) = acc;
    }
  return out;
}

DensityMatrix embed_padded(const DensityMatrix &small, std::size_t n) {
  if (n < small.dim())
    throw Error(ErrorCode::too_small,
                "embedding target " + std::to_string(n) +
                    " is smaller than matrix dim " +
                    std::to_string(small.dim()));
  ComplexMatrix out(n, n);
  for (std::size_t i = 0; i < small.dim(); ++i)
    for (std::size_t j = 0; j < small.dim(); ++j)
      out(i, j) = small.matrix()(i, j);
  return DensityMatrix(out);
}

PortraitPair portraits(const DensityMatrix &rho, const Factorization &f) {
  DensityMatrix first = portrait_first(rho, f);
  DensityMatrix second = portrait_second(rho, f);
  DensityMatrix first_padded = embed_padded(first, f.n());
  DensityMatrix second_padded = embed_padded(second, f.n());
  return PortraitPair{std::move(first), std::move(second),
                      std::move(first_padded), std::move(second_padded), f};
}

QuantumReport quantum_subadditivity_report(const DensityMatrix &rho,
                                           const Factorization &f) {
  require_dim(rho, f);
  const double s_joint = von_neumann_entropy(rho);
  const double s_first = von_neumann_entropy(portrait_first(rho, f));
  const double s_second = von_neumann_entropy(portrait_second(rho, f));
  return QuantumReport{s_joint, s_first, s_second,
                       s_first + s_second - s_joint, f};
}

QuantumReport permuted_portraits(const DensityMatrix &rho,
                                 const Factorization &f,
                                 const std::vector<std::size_t> &sigma) {
  require_dim(rho, f);
  check_permutation(sigma, rho.dim());
  const ComplexMatrix p = permutation_matrix(sigma);
  return quantum_subadditivity_report(
      DensityMatrix(conjugate_by(p, rho.matrix())), f);
}

QuantumReport qudit_j2_example(const DensityMatrix &rho5) {
  if (rho5.dim() != 5)
    throw Error(ErrorCode::dimension_mismatch,
                "the j=2 example takes a 5x5 density matrix");
  return quantum_subadditivity_report(embed_padded(rho5, 6),
                                      Factorization(3, 2));
}

} // namespace entroportrait
