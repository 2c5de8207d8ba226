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

// Entanglement generated by the collision model. The system (qubit 0) starts
// in alpha|e0> + beta|e1> (control basis) and each reservoir qubit in a pure
// |psi>; after n collisions the register holds
//
//   alpha |e0> |psi0>^n |psi>^(N-n) + beta |e1> |psi1>^n |psi>^(N-n),
//
// with |psi_j> = V_j |psi>. Qubit 0 is the leftmost tensor factor.

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "qdecoh/collisions.hpp"

namespace qdecoh {

inline constexpr std::size_t kMaxStatevectorQubits = 20;
inline constexpr std::size_t kMaxCkwQubits = 12;
/// Residuals in [-kClampTolerance, 0) are reported as 0.
inline constexpr double kClampTolerance = 1e-8;

class PureMultiQubitState {
 public:
  /// Throws kDimensionMismatch unless the length is a power of two,
  /// kRegisterTooLarge beyond kMaxStatevectorQubits and kInvalidState unless
  /// the norm is 1 within `tol`.
  explicit PureMultiQubitState(std::vector<Complex> amplitudes,
                               double tol = kDefaultTolerance);

  QubitRegisterShape shape() const { return shape_; }
  std::size_t num_qubits() const { return shape_.num_qubits; }
  std::span<const Complex> amplitudes() const { return amplitudes_; }
  double norm() const;
  ComplexMatrix reduced(std::vector<std::size_t> keep) const;

 private:
  std::vector<Complex> amplitudes_;
  QubitRegisterShape shape_;
};

struct EntanglementReport {
  std::size_t n = 0;             // collisions so far
  double tau0 = 0.0;             // system vs. rest
  double tauk = 0.0;             // reservoir qubit 1 vs. rest
  std::vector<double> tau0k;     // C_0k^2, k = 1..N
  double taujk = 0.0;            // largest reservoir-reservoir C_jk^2
  std::vector<double> tangles;   // tau_j per qubit
  std::vector<double> delta_j;   // clamped CKW residuals
  std::vector<double> delta_j_raw;
  double delta = 0.0;            // mean of delta_j over all qubits

  double sum_tau0k() const;
};

/// Wootters' lambda_1..4 (descending), the singular values of the symmetric
/// matrix A^T (sigma_y (x) sigma_y) A with rho = A A^dagger.
std::array<double, 4> wootters_lambdas(const ComplexMatrix& rho2,
                                       double tol = kDefaultTolerance);

/// max(0, l1 - l2 - l3 - l4). Throws kInvalidState for an invalid 4x4 state.
double concurrence(const ComplexMatrix& rho2, double tol = kDefaultTolerance);

/// 4 det(rho) = 2 (1 - Tr rho^2).
double tangle(const DensityMatrix& rho);

/// Pure reservoir state |psi> of spec.xi; throws kMixedState otherwise.
ComplexMatrix reservoir_ket(const CollisionSpec& spec, double tol = kDefaultTolerance);

/// |Omega_n> assembled from its closed form.
PureMultiQubitState network_state_closed_form(const CollisionSpec& spec,
                                              Complex alpha, Complex beta,
                                              std::size_t num_reservoir,
                                              std::size_t n,
                                              double tol = kDefaultTolerance);

/// |Omega_n> by applying build_unitary(spec) to qubits (0, k), k = 1..n, of
/// the initial product statevector.
PureMultiQubitState evolve_network(const CollisionSpec& spec, Complex alpha,
                                   Complex beta, std::size_t num_reservoir,
                                   std::size_t n, double tol = kDefaultTolerance);

struct ReducedStates {
  ComplexMatrix rho0;                 // system
  ComplexMatrix rhok;                 // collided reservoir qubit k
  ComplexMatrix rho0k;                // system + reservoir qubit k
  std::optional<ComplexMatrix> rhojk; // two collided reservoir qubits (n >= 2)
};

/// Closed-form reduced states after n collisions, for 1 <= k <= n, in
/// computational coordinates.
ReducedStates analytic_reduced_states(const CollisionSpec& spec, Complex alpha,
                                      Complex beta, std::size_t n, std::size_t k,
                                      double tol = kDefaultTolerance);

/// Closed-form tangles for overlap = |<psi0|psi1>|, n >= 1. The report covers
/// the system and the n collided reservoir qubits.
EntanglementReport analytic_tangles(double overlap, Complex alpha, Complex beta,
                                    std::size_t n);

/// Tangles, all pairwise concurrences and CKW residuals of a pure register of
/// at most kMaxCkwQubits qubits.
EntanglementReport ckw_check(const PureMultiQubitState& state,
                             double tol = kDefaultTolerance);

/// |alpha|^2 (|psi0><psi0|)^n + |beta|^2 (|psi1><psi1|)^n, tensored with
/// |psi><psi|^(N-n).
ComplexMatrix analytic_environment_state(const CollisionSpec& spec, Complex alpha,
                                         Complex beta, std::size_t num_reservoir,
                                         std::size_t n,
                                         double tol = kDefaultTolerance);

/// Whether tracing the system out of |Omega_n> reproduces
/// analytic_environment_state within 1e-10.
bool env_state_check(const CollisionSpec& spec, Complex alpha, Complex beta,
                     std::size_t num_reservoir, std::size_t n,
                     double tol = kDefaultTolerance);

}  // namespace qdecoh
