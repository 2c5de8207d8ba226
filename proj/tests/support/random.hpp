// Copyright 2026 The qdecoh Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Seeded random objects for property tests.

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "qdecoh/qdecoh.hpp"

namespace qdecoh::testing {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo = 0.0, double hi = 1.0) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline Complex gaussian_complex(Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  const double re = n(rng);
  return {re, n(rng)};
}

inline std::vector<Complex> random_ket(Rng& rng, std::size_t dim) {
  std::vector<Complex> v(dim);
  double norm = 0.0;
  for (auto& z : v) {
    z = gaussian_complex(rng);
    norm += std::norm(z);
  }
  for (auto& z : v) z /= std::sqrt(norm);
  return v;
}

/// Haar-distributed unitary: Gram-Schmidt on a complex Ginibre matrix.
inline ComplexMatrix haar_unitary(Rng& rng, std::size_t dim = 2) {
  ComplexMatrix u(dim, dim);
  for (std::size_t j = 0; j < dim; ++j) {
    std::vector<Complex> col(dim);
    for (auto& z : col) z = gaussian_complex(rng);
    for (std::size_t k = 0; k < j; ++k) {
      Complex proj{};
      for (std::size_t i = 0; i < dim; ++i) proj += std::conj(u(i, k)) * col[i];
      for (std::size_t i = 0; i < dim; ++i) col[i] -= proj * u(i, k);
    }
    double norm = 0.0;
    for (const auto& z : col) norm += std::norm(z);
    for (std::size_t i = 0; i < dim; ++i) u(i, j) = col[i] / std::sqrt(norm);
  }
  return u;
}

/// Random density matrix G G^dagger / Tr with G a dim x rank Ginibre matrix.
inline ComplexMatrix random_density(Rng& rng, std::size_t dim = 2, std::size_t rank = 0) {
  if (rank == 0) rank = dim;
  ComplexMatrix g(dim, rank);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < rank; ++j) g(i, j) = gaussian_complex(rng);
  ComplexMatrix rho = g * g.adjoint();
  rho *= Complex{1.0 / rho.trace().real()};
  return rho;
}

inline DecoherenceParams random_params(Rng& rng) {
  return DecoherenceParams(uniform(rng, 1e-3, 1.0 - 1e-3),
                           uniform(rng, 0.0, 2.0 * std::numbers::pi));
}

inline DecoherenceBasis random_basis(Rng& rng) {
  return DecoherenceBasis::from_unitary(haar_unitary(rng));
}

inline CollisionSpec random_spec(Rng& rng, bool pure_xi = false) {
  CollisionSpec spec;
  spec.v0 = haar_unitary(rng);
  spec.v1 = haar_unitary(rng);
  spec.xi = DensityMatrix::from_matrix(random_density(rng, 2, pure_xi ? 1 : 2));
  spec.basis = random_basis(rng);
  return spec;
}

}  // namespace qdecoh::testing
