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

// Collision model: the system qubit controls a unitary on each fresh
// reservoir qubit, U = |e0><e0| (x) V0 + |e1><e1| (x) V1, where {e0, e1} is the
// control (decoherence) basis. The induced single-qubit channel depends only
// on <X>_xi with X = V1^dagger V0.

#include <optional>
#include <vector>

#include "qdecoh/channels.hpp"

namespace qdecoh {

struct CollisionSpec {
  ComplexMatrix v0 = ComplexMatrix::identity(2);
  ComplexMatrix v1 = ComplexMatrix::identity(2);
  DensityMatrix xi;
  DecoherenceBasis basis;

  /// Throws kDimensionMismatch or kNotUnitary.
  void validate(double tol = kDefaultTolerance) const;
};

struct XOperator {
  ComplexMatrix x;
  Complex mean;  // Tr(X xi) = lambda e^{i phi}

  DecoherenceParams params() const;
  /// Channel entries of the induced map: a = Re<X>, b = Im<X>.
  double a() const { return mean.real(); }
  double b() const { return mean.imag(); }
};

ComplexMatrix build_unitary(const CollisionSpec& spec,
                            double tol = kDefaultTolerance);

XOperator x_operator(const CollisionSpec& spec, double tol = kDefaultTolerance);

/// Induced channel in the S-frame of spec.basis.
TransferMatrix induced_channel(const CollisionSpec& spec,
                               double tol = kDefaultTolerance);

/// One collision: Tr_res[U (rho (x) xi) U^dagger].
DensityMatrix collide(const CollisionSpec& spec, const DensityMatrix& rho,
                      double tol = kDefaultTolerance);

/// rho0 followed by the states after 1..n collisions with fresh reservoir
/// qubits, each step simulated by explicit two-qubit conjugation.
std::vector<DensityMatrix> simulate_collisions(const CollisionSpec& spec,
                                               const DensityMatrix& rho0,
                                               std::size_t n,
                                               double tol = kDefaultTolerance);

struct ControlledBlocks {
  ComplexMatrix v0;
  ComplexMatrix v1;
};

/// Splits a 4x4 unitary into controlled form in `basis`, or nullopt when the
/// off-diagonal blocks do not vanish. The common global phase is fixed by
/// making the first non-negligible entry of V0 real and positive.
std::optional<ControlledBlocks> check_controlled_form(
    const ComplexMatrix& u, const DecoherenceBasis& basis = {},
    double tol = kDefaultTolerance);

/// V1 = I, V0 = diag(e^{i(phi+delta)}, e^{i(phi-delta)}) with
/// delta = arccos(lambda), xi = |+><+|, in the given control basis.
CollisionSpec design_collision(const DecoherenceParams& target,
                               const DecoherenceBasis& basis = {});

}  // namespace qdecoh
