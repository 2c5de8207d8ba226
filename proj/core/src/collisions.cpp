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

#include "qdecoh/collisions.hpp"

#include <numbers>

namespace qdecoh {
namespace {

ComplexMatrix projector(const DecoherenceBasis& basis, std::size_t k) {
  const ComplexMatrix v = basis.ket(k);
  return v * v.adjoint();
}

ComplexMatrix block(const ComplexMatrix& m, std::size_t r0, std::size_t c0) {
  ComplexMatrix b(2, 2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) b(i, j) = m(r0 + i, c0 + j);
  return b;
}

}  // namespace

void CollisionSpec::validate(double tol) const {
  for (const ComplexMatrix* v : {&v0, &v1}) {
    if (v->rows() != 2 || v->cols() != 2) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "V0 and V1 must be 2x2, got " + v->shape_string());
    }
    if (!is_unitary(*v, tol)) {
      throw Error(ErrorCode::kNotUnitary, "V0 and V1 must be unitary");
    }
  }
}

DecoherenceParams XOperator::params() const {
  return DecoherenceParams(std::abs(mean), std::arg(mean));
}

ComplexMatrix build_unitary(const CollisionSpec& spec, double tol) {
  spec.validate(tol);
  return kron(projector(spec.basis, 0), spec.v0) +
         kron(projector(spec.basis, 1), spec.v1);
}

XOperator x_operator(const CollisionSpec& spec, double tol) {
  spec.validate(tol);
  XOperator op;
  op.x = spec.v1.adjoint() * spec.v0;
  op.mean = (op.x * spec.xi.matrix()).trace();
  return op;
}

TransferMatrix induced_channel(const CollisionSpec& spec, double tol) {
  return make_decoherence_channel(x_operator(spec, tol).params());
}

DensityMatrix collide(const CollisionSpec& spec, const DensityMatrix& rho,
                      double tol) {
  const ComplexMatrix u = build_unitary(spec, tol);
  const ComplexMatrix joint = u * kron(rho.matrix(), spec.xi.matrix()) * u.adjoint();
  return DensityMatrix::from_matrix(partial_trace(joint, {2}, {0}), tol);
}

std::vector<DensityMatrix> simulate_collisions(const CollisionSpec& spec,
                                               const DensityMatrix& rho0,
                                               std::size_t n, double tol) {
  const ComplexMatrix u = build_unitary(spec, tol);
  const ComplexMatrix ud = u.adjoint();
  std::vector<DensityMatrix> trajectory;
  trajectory.reserve(n + 1);
  trajectory.push_back(rho0);
  for (std::size_t k = 0; k < n; ++k) {
    const ComplexMatrix joint =
        u * kron(trajectory.back().matrix(), spec.xi.matrix()) * ud;
    trajectory.push_back(DensityMatrix::from_matrix(partial_trace(joint, {2}, {0}), tol));
  }
  return trajectory;
}

std::optional<ControlledBlocks> check_controlled_form(const ComplexMatrix& u,
                                                      const DecoherenceBasis& basis,
                                                      double tol) {
  if (u.rows() != 4 || u.cols() != 4) {
    throw Error(ErrorCode::kDimensionMismatch,
                "controlled form needs a 4x4 unitary, got " + u.shape_string());
  }
  if (!is_unitary(u, tol)) {
    throw Error(ErrorCode::kNotUnitary, "interaction is not unitary");
  }
  const ComplexMatrix w = kron(basis.unitary(), ComplexMatrix::identity(2));
  const ComplexMatrix local = w.adjoint() * u * w;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      if (std::abs(local(i, j + 2)) > tol || std::abs(local(i + 2, j)) > tol) {
        return std::nullopt;
      }

  ControlledBlocks out{block(local, 0, 0), block(local, 2, 2)};
  for (const Complex& z : out.v0.data()) {
    if (std::abs(z) > tol) {
      const Complex phase = std::conj(z) / std::abs(z);
      out.v0 *= phase;
      out.v1 *= phase;
      break;
    }
  }
  return out;
}

CollisionSpec design_collision(const DecoherenceParams& target,
                               const DecoherenceBasis& basis) {
  const double delta = std::acos(std::clamp(target.lambda(), 0.0, 1.0));
  CollisionSpec spec;
  spec.v0 = ComplexMatrix::diagonal({std::polar(1.0, target.phi() + delta),
                                     std::polar(1.0, target.phi() - delta)});
  spec.v1 = ComplexMatrix::identity(2);
  const double h = std::numbers::sqrt2 / 2.0;
  spec.xi = DensityMatrix::pure(h, h);
  spec.basis = basis;
  return spec;
}

}  // namespace qdecoh
