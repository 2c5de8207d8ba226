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

// Continuous-time decoherence: the Markov generator G of the semigroup
// E_t = exp(t G), its Lindblad coefficients, and trajectory integration.
//
// In the S-frame a decoherence generator has the block form
//
//   G = [[0, 0, 0, 0],
//        [0, a, b, 0],
//        [0, c, d, 0],
//        [0, 0, 0, 0]]
//
// and describes decoherence exactly when a = d < 0 and c = -b. The
// collision-model semigroup has a = ln(lambda)/tau, b = phi/tau.

#include <array>
#include <span>
#include <string>
#include <vector>

#include "qdecoh/channels.hpp"

namespace qdecoh {

class Generator {
 public:
  Generator() : g_(4, 4) {}
  /// Throws kDimensionMismatch unless `g` is 4x4.
  explicit Generator(const RealMatrix& g);

  double operator()(std::size_t k, std::size_t l) const { return g_(k, l); }
  const RealMatrix& matrix() const { return g_; }

 private:
  RealMatrix g_;
};

/// Hamiltonian H = sum_a h_a S_a and coefficients c_ab = d_ab - i e_ab of
///   drho/dt = -i[H, rho] + 1/2 sum_ab c_ab ([S_a, rho S_b] + [S_a rho, S_b]).
struct LindbladSpec {
  std::array<double, 3> h{};
  ComplexMatrix c = ComplexMatrix(3, 3);

  RealMatrix d() const;  // symmetric part
  RealMatrix e() const;  // antisymmetric part
  /// Minimum eigenvalue of c; the semigroup is Markovian iff it is >= 0.
  double min_coefficient_eigenvalue() const;
};

struct GeneratorDiagnosis {
  bool valid = false;
  /// a = d = 0, c = -b: pure precession, the unitary boundary of the family.
  bool unitary_limit = false;
  std::string reason;
};

struct DoubleCommutatorForm {
  ComplexMatrix h;   // h3 S_3
  double h3 = 0.0;
  double gamma = 0.0;
};

/// Block [[ln l, phi], [-phi, ln l]] / tau. Throws kNoGenerator for l = 0.
Generator generator_from_params(const DecoherenceParams& p, double tau = 1.0);

/// exp(t G) as a transfer matrix.
TransferMatrix propagator(const Generator& g, double t);

/// Hamiltonian and dissipator coefficients by the quarter sum/difference
/// formulas. Throws kNotTracePreserving if row 0 of G is not zero.
LindbladSpec generator_to_lindblad(const Generator& g,
                                   double tol = kDefaultTolerance);

GeneratorDiagnosis validate_decoherence_generator(const Generator& g,
                                                  double tol = kDefaultTolerance);

/// G[x] for a 2x2 operator, with G given in the S-frame of `basis`.
ComplexMatrix apply_generator(const Generator& g, const ComplexMatrix& x,
                              const DecoherenceBasis& basis = {});

/// Closed-form states exp(t G)[rho0] at each grid time. Accepts valid
/// decoherence generators and their unitary limit; throws kInvalidGenerator
/// otherwise and kInvalidParameter for negative or decreasing times.
std::vector<DensityMatrix> evolve(const Generator& g, const DensityMatrix& rho0,
                                  std::span<const double> t_grid,
                                  const DecoherenceBasis& basis = {},
                                  double tol = kDefaultTolerance);

/// Same trajectory from fixed-step classical RK4 on the Bloch 4-vector, using
/// at most `step` per substep.
std::vector<DensityMatrix> evolve_rk4(const Generator& g, const DensityMatrix& rho0,
                                      std::span<const double> t_grid,
                                      const DecoherenceBasis& basis = {},
                                      double step = 0.01,
                                      double tol = kDefaultTolerance);

/// drho/dt = -i[H, rho] - (1 / 2 gamma) [H, [H, rho]] with H = h3 S_3,
/// h3 = -b/2 and gamma = -b^2 / (2a). Throws kInvalidGenerator for invalid G
/// and kDegenerateForm when b = 0 (pure dephasing) or a = 0.
DoubleCommutatorForm to_double_commutator(const Generator& g,
                                          const DecoherenceBasis& basis = {},
                                          double tol = kDefaultTolerance);

ComplexMatrix apply_double_commutator(const DoubleCommutatorForm& form,
                                      const ComplexMatrix& rho);

}  // namespace qdecoh
