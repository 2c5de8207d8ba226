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

#include "qdecoh/entanglement.hpp"

#include <numeric>

namespace qdecoh {
namespace {

// Eigenvalues of rho below this are treated as exact zeros when factoring
// rho = A A^dagger; keeping them would feed sqrt(rounding noise) into A.
constexpr double kRankCutoff = 1e-13;
constexpr double kEnvironmentTolerance = 1e-10;

using Ket = std::vector<Complex>;

Ket to_ket(const ComplexMatrix& column) {
  return Ket(column.data().begin(), column.data().end());
}

Ket mat_vec(const ComplexMatrix& m, const Ket& v) {
  Ket out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
  return out;
}

Ket kron(const Ket& a, const Ket& b) {
  Ket out;
  out.reserve(a.size() * b.size());
  for (const Complex& x : a)
    for (const Complex& y : b) out.push_back(x * y);
  return out;
}

Ket kron_power(const Ket& v, std::size_t count) {
  Ket out{Complex{1.0}};
  for (std::size_t i = 0; i < count; ++i) out = kron(out, v);
  return out;
}

Complex inner(const Ket& a, const Ket& b) {
  Complex s{};
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

Complex int_power(Complex z, std::size_t n) {
  Complex out{1.0};
  for (std::size_t i = 0; i < n; ++i) out *= z;
  return out;
}

ComplexMatrix outer(const Ket& a, const Ket& b) {
  ComplexMatrix m(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) m(i, j) = a[i] * std::conj(b[j]);
  return m;
}

ComplexMatrix projector_power(const Ket& v, std::size_t count) {
  const Ket p = kron_power(v, count);
  return outer(p, p);
}

double clamp_residual(double x) {
  return (x < 0.0 && x >= -kClampTolerance) ? 0.0 : x;
}

double four_det(const ComplexMatrix& rho) {
  return 4.0 * (rho(0, 0) * rho(1, 1) - rho(0, 1) * rho(1, 0)).real();
}

struct NetworkInputs {
  Ket e0, e1, psi, psi0, psi1;
};

NetworkInputs prepare(const CollisionSpec& spec, Complex alpha, Complex beta,
                      std::size_t num_reservoir, std::size_t n, double tol) {
  spec.validate(tol);
  if (std::abs(std::norm(alpha) + std::norm(beta) - 1.0) > tol) {
    throw Error(ErrorCode::kInvalidState, "|alpha|^2 + |beta|^2 must equal 1");
  }
  if (num_reservoir + 1 > kMaxStatevectorQubits) {
    throw Error(ErrorCode::kRegisterTooLarge,
                std::to_string(num_reservoir + 1) + " qubits exceed the statevector cap of " +
                    std::to_string(kMaxStatevectorQubits));
  }
  if (n > num_reservoir) {
    throw Error(ErrorCode::kInvalidParameter,
                "collision count exceeds the number of reservoir qubits");
  }
  NetworkInputs in;
  in.e0 = to_ket(spec.basis.ket(0));
  in.e1 = to_ket(spec.basis.ket(1));
  in.psi = to_ket(reservoir_ket(spec, tol));
  in.psi0 = mat_vec(spec.v0, in.psi);
  in.psi1 = mat_vec(spec.v1, in.psi);
  return in;
}

}  // namespace

PureMultiQubitState::PureMultiQubitState(std::vector<Complex> amplitudes, double tol)
    : amplitudes_(std::move(amplitudes)),
      shape_(QubitRegisterShape::for_dimension(amplitudes_.size())) {
  if (shape_.num_qubits > kMaxStatevectorQubits) {
    throw Error(ErrorCode::kRegisterTooLarge, "statevector exceeds 20 qubits");
  }
  if (std::abs(norm() - 1.0) > tol) {
    throw Error(ErrorCode::kInvalidState, "statevector is not normalized");
  }
}

double PureMultiQubitState::norm() const {
  double s = 0.0;
  for (const Complex& a : amplitudes_) s += std::norm(a);
  return std::sqrt(s);
}

ComplexMatrix PureMultiQubitState::reduced(std::vector<std::size_t> keep) const {
  return reduced_density_matrix(amplitudes_, shape_, std::move(keep));
}

double EntanglementReport::sum_tau0k() const {
  return std::accumulate(tau0k.begin(), tau0k.end(), 0.0);
}

std::array<double, 4> wootters_lambdas(const ComplexMatrix& rho, double tol) {
  if (rho.rows() != 4 || rho.cols() != 4) {
    throw Error(ErrorCode::kDimensionMismatch,
                "two-qubit state must be 4x4, got " + rho.shape_string());
  }
  if (hermiticity_defect(rho) > tol || std::abs(rho.trace() - Complex{1.0}) > tol) {
    throw Error(ErrorCode::kInvalidState, "not a two-qubit density matrix");
  }
  const HermitianEigen eig = herm_eig(rho, tol);
  if (eig.values.back() < -tol) {
    throw Error(ErrorCode::kInvalidState, "two-qubit state is not positive");
  }

  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < 4; ++i)
    if (eig.values[i] > kRankCutoff) support.push_back(i);
  const std::size_t r = support.size();
  ComplexMatrix a(4, r);
  for (std::size_t col = 0; col < r; ++col) {
    const double w = std::sqrt(eig.values[support[col]]);
    for (std::size_t row = 0; row < 4; ++row)
      a(row, col) = w * eig.vectors(row, support[col]);
  }
  const ComplexMatrix yy = kron(pauli::y(), pauli::y());
  const ComplexMatrix t = a.transpose() * yy * a;

  // Singular values of t from the Hermitian dilation [[0, t], [t^dagger, 0]].
  ComplexMatrix dilation(2 * r, 2 * r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      dilation(i, r + j) = t(i, j);
      dilation(r + j, i) = std::conj(t(i, j));
    }
  const HermitianEigen sv = herm_eig(dilation, 1e-6);
  std::array<double, 4> lambdas{};
  for (std::size_t i = 0; i < r; ++i) lambdas[i] = std::max(0.0, sv.values[i]);
  return lambdas;
}

double concurrence(const ComplexMatrix& rho, double tol) {
  const auto l = wootters_lambdas(rho, tol);
  return std::max(0.0, l[0] - l[1] - l[2] - l[3]);
}

double tangle(const DensityMatrix& rho) { return four_det(rho.matrix()); }

ComplexMatrix reservoir_ket(const CollisionSpec& spec, double tol) {
  if (std::abs(spec.xi.purity() - 1.0) > tol) {
    throw Error(ErrorCode::kMixedState,
                "reservoir state must be pure for the statevector description");
  }
  const HermitianEigen eig = herm_eig(spec.xi.matrix(), tol);
  ComplexMatrix v(2, 1);
  v(0, 0) = eig.vectors(0, 0);
  v(1, 0) = eig.vectors(1, 0);
  return v;
}

PureMultiQubitState network_state_closed_form(const CollisionSpec& spec,
                                              Complex alpha, Complex beta,
                                              std::size_t num_reservoir,
                                              std::size_t n, double tol) {
  const NetworkInputs in = prepare(spec, alpha, beta, num_reservoir, n, tol);
  const Ket idle = kron_power(in.psi, num_reservoir - n);
  Ket branch0 = kron(kron(in.e0, kron_power(in.psi0, n)), idle);
  const Ket branch1 = kron(kron(in.e1, kron_power(in.psi1, n)), idle);
  for (std::size_t i = 0; i < branch0.size(); ++i)
    branch0[i] = alpha * branch0[i] + beta * branch1[i];
  return PureMultiQubitState(std::move(branch0), tol);
}

PureMultiQubitState evolve_network(const CollisionSpec& spec, Complex alpha,
                                   Complex beta, std::size_t num_reservoir,
                                   std::size_t n, double tol) {
  const NetworkInputs in = prepare(spec, alpha, beta, num_reservoir, n, tol);
  Ket chi(2);
  for (std::size_t i = 0; i < 2; ++i) chi[i] = alpha * in.e0[i] + beta * in.e1[i];
  Ket psi = kron(chi, kron_power(in.psi, num_reservoir));

  const ComplexMatrix u = build_unitary(spec, tol);
  const std::size_t qubits = num_reservoir + 1;
  const std::size_t system_mask = std::size_t{1} << (qubits - 1);
  for (std::size_t k = 1; k <= n; ++k) {
    const std::size_t target_mask = std::size_t{1} << (qubits - 1 - k);
    for (std::size_t idx = 0; idx < psi.size(); ++idx) {
      if (idx & (system_mask | target_mask)) continue;
      const std::array<std::size_t, 4> slots{idx, idx | target_mask, idx | system_mask,
                                             idx | system_mask | target_mask};
      std::array<Complex, 4> in_amp{};
      for (std::size_t s = 0; s < 4; ++s) in_amp[s] = psi[slots[s]];
      for (std::size_t row = 0; row < 4; ++row) {
        Complex acc{};
        for (std::size_t col = 0; col < 4; ++col) acc += u(row, col) * in_amp[col];
        psi[slots[row]] = acc;
      }
    }
  }
  return PureMultiQubitState(std::move(psi), tol);
}

ReducedStates analytic_reduced_states(const CollisionSpec& spec, Complex alpha,
                                      Complex beta, std::size_t n, std::size_t k,
                                      double tol) {
  if (k < 1 || k > n) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "reservoir index k must satisfy 1 <= k <= n");
  }
  const NetworkInputs in = prepare(spec, alpha, beta, n, n, tol);
  const double p0 = std::norm(alpha);
  const double p1 = std::norm(beta);
  const Complex coherence = alpha * std::conj(beta);
  // <psi1|psi0> = <X>_psi.
  const Complex overlap = inner(in.psi1, in.psi0);

  ReducedStates out;
  out.rho0 = outer(in.e0, in.e0) * Complex{p0} + outer(in.e1, in.e1) * Complex{p1};
  const ComplexMatrix c0 = outer(in.e0, in.e1) * (coherence * int_power(overlap, n));
  out.rho0 += c0 + c0.adjoint();

  out.rhok = outer(in.psi0, in.psi0) * Complex{p0} + outer(in.psi1, in.psi1) * Complex{p1};

  const Ket a = kron(in.e0, in.psi0);
  const Ket b = kron(in.e1, in.psi1);
  out.rho0k = outer(a, a) * Complex{p0} + outer(b, b) * Complex{p1};
  const ComplexMatrix c0k = outer(a, b) * (coherence * int_power(overlap, n - 1));
  out.rho0k += c0k + c0k.adjoint();

  if (n >= 2) {
    const Ket aa = kron(in.psi0, in.psi0);
    const Ket bb = kron(in.psi1, in.psi1);
    out.rhojk = outer(aa, aa) * Complex{p0} + outer(bb, bb) * Complex{p1};
  }
  return out;
}

EntanglementReport analytic_tangles(double overlap, Complex alpha, Complex beta,
                                    std::size_t n) {
  if (!(overlap >= -1e-12 && overlap <= 1.0 + 1e-12)) {
    throw Error(ErrorCode::kInvalidParameter, "overlap must lie in [0, 1]");
  }
  if (n < 1) {
    throw Error(ErrorCode::kInvalidParameter, "closed-form tangles need n >= 1");
  }
  overlap = std::clamp(overlap, 0.0, 1.0);
  const double weight = 4.0 * std::norm(alpha) * std::norm(beta);
  const double o2 = overlap * overlap;
  const double nn = static_cast<double>(n);

  EntanglementReport r;
  r.n = n;
  r.tau0 = weight * (1.0 - std::pow(o2, nn));
  r.tauk = weight * (1.0 - o2);
  const double pair = weight * std::pow(o2, nn - 1.0) * (1.0 - o2);
  r.tau0k.assign(n, pair);
  r.taujk = 0.0;
  r.tangles.assign(n + 1, r.tauk);
  r.tangles[0] = r.tau0;
  r.delta_j_raw.assign(n + 1, r.tauk - pair);
  r.delta_j_raw[0] = r.tau0 - nn * pair;
  for (double d : r.delta_j_raw) r.delta_j.push_back(clamp_residual(d));
  r.delta = std::accumulate(r.delta_j.begin(), r.delta_j.end(), 0.0) /
            static_cast<double>(n + 1);
  return r;
}

EntanglementReport ckw_check(const PureMultiQubitState& state, double tol) {
  const std::size_t q = state.num_qubits();
  if (q > kMaxCkwQubits) {
    throw Error(ErrorCode::kRegisterTooLarge,
                "all-pairs CKW check is capped at " + std::to_string(kMaxCkwQubits) +
                    " qubits");
  }
  EntanglementReport r;
  for (std::size_t j = 0; j < q; ++j)
    r.tangles.push_back(clamp_residual(four_det(state.reduced({j}))));

  RealMatrix pairs(q, q);
  for (std::size_t j = 0; j < q; ++j)
    for (std::size_t k = j + 1; k < q; ++k) {
      const double c = concurrence(state.reduced({j, k}), tol);
      pairs(j, k) = pairs(k, j) = c * c;
    }

  for (std::size_t j = 0; j < q; ++j) {
    double residual = r.tangles[j];
    for (std::size_t k = 0; k < q; ++k)
      if (k != j) residual -= pairs(j, k);
    r.delta_j_raw.push_back(residual);
    r.delta_j.push_back(clamp_residual(residual));
  }
  r.delta = std::accumulate(r.delta_j.begin(), r.delta_j.end(), 0.0) /
            static_cast<double>(q);

  r.tau0 = r.tangles[0];
  if (q > 1) r.tauk = r.tangles[1];
  for (std::size_t k = 1; k < q; ++k) r.tau0k.push_back(pairs(0, k));
  for (std::size_t j = 1; j < q; ++j)
    for (std::size_t k = j + 1; k < q; ++k) r.taujk = std::max(r.taujk, pairs(j, k));
  return r;
}

ComplexMatrix analytic_environment_state(const CollisionSpec& spec, Complex alpha,
                                         Complex beta, std::size_t num_reservoir,
                                         std::size_t n, double tol) {
  const NetworkInputs in = prepare(spec, alpha, beta, num_reservoir, n, tol);
  ComplexMatrix collided = projector_power(in.psi0, n) * Complex{std::norm(alpha)} +
                           projector_power(in.psi1, n) * Complex{std::norm(beta)};
  return kron(collided, projector_power(in.psi, num_reservoir - n));
}

bool env_state_check(const CollisionSpec& spec, Complex alpha, Complex beta,
                     std::size_t num_reservoir, std::size_t n, double tol) {
  const PureMultiQubitState state =
      evolve_network(spec, alpha, beta, num_reservoir, n, tol);
  std::vector<std::size_t> environment(num_reservoir);
  std::iota(environment.begin(), environment.end(), std::size_t{1});
  const ComplexMatrix traced = state.reduced(environment);
  const ComplexMatrix expected =
      analytic_environment_state(spec, alpha, beta, num_reservoir, n, tol);
  return max_abs_diff(traced, expected) <= kEnvironmentTolerance;
}

}  // namespace qdecoh
