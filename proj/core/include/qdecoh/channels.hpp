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

// Qubit channels in the left-right (Pauli transfer) representation.
//
// A transfer matrix E acts on the 4-vector (1, r) of Bloch coordinates taken
// in an operator basis S_0 = I, S_j = W sigma_j W^dagger, where the columns of
// W are the decoherence basis {|psi>, |psi_perp>}. E_kl = Tr(S_k E[S_l]) / 2.
// Unless stated otherwise the S-frame is the computational one (W = I).

#include <array>
#include <cstddef>
#include <optional>

#include "qdecoh/smallmat.hpp"

namespace qdecoh {

struct BlochVector {
  std::array<double, 3> r{};

  double norm() const;
  double operator[](std::size_t j) const { return r[j]; }
};

class DecoherenceBasis {
 public:
  /// Computational basis {|0>, |1>}.
  DecoherenceBasis();

  static DecoherenceBasis computational() { return {}; }
  /// Columns of `w` are |psi>, |psi_perp>. Throws kNotUnitary.
  static DecoherenceBasis from_unitary(const ComplexMatrix& w,
                                       double tol = kDefaultTolerance);
  /// Basis whose S_3 has Bloch axis `axis` (normalized internally).
  static DecoherenceBasis from_axis(const std::array<double, 3>& axis);

  const ComplexMatrix& unitary() const { return w_; }
  /// |psi> for k = 0, |psi_perp> for k = 1, as a 2x1 column.
  ComplexMatrix ket(std::size_t k) const;
  const ComplexMatrix& s(std::size_t j) const { return s_.at(j); }
  /// Bloch axis of S_3 in computational coordinates.
  std::array<double, 3> axis() const;
  /// 4x4 block diag(1, O) with O_jk = Tr(sigma_j S_k) / 2: maps S-frame
  /// coordinates to computational ones.
  RealMatrix frame() const;

 private:
  explicit DecoherenceBasis(ComplexMatrix w);

  ComplexMatrix w_;
  std::array<ComplexMatrix, 4> s_;
};

class DensityMatrix {
 public:
  /// The total mixture I/2.
  DensityMatrix();

  /// Validates Hermiticity, unit trace and positivity within `tol`.
  static DensityMatrix from_matrix(const ComplexMatrix& m,
                                   double tol = kDefaultTolerance);
  /// rho = (I + r.S) / 2. Throws kInvalidState if |r| > 1 + tol.
  static DensityMatrix from_bloch(const BlochVector& r,
                                  const DecoherenceBasis& basis = {},
                                  double tol = kDefaultTolerance);
  /// |chi><chi| with |chi> = alpha|0> + beta|1>.
  static DensityMatrix pure(Complex alpha, Complex beta,
                            double tol = kDefaultTolerance);

  const ComplexMatrix& matrix() const { return m_; }
  Complex operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  double purity() const;
  /// Matrix elements <e_i|rho|e_j> in the given basis.
  ComplexMatrix in_basis(const DecoherenceBasis& basis) const;

 private:
  explicit DensityMatrix(ComplexMatrix m) : m_(std::move(m)) {}

  ComplexMatrix m_;
};

/// Decoherence parameters (lambda, phi) of the channel diag(1, lambda R_phi, 1).
/// Stored canonically: lambda in [0, 1], phi in [0, 2 pi). A negative lambda
/// is folded into phi + pi.
class DecoherenceParams {
 public:
  DecoherenceParams() = default;
  /// Throws kInvalidParameter if |lambda| > 1 or either value is not finite.
  DecoherenceParams(double lambda, double phi);

  double lambda() const { return lambda_; }
  double phi() const { return phi_; }
  /// Channel entries a = lambda cos(phi), b = lambda sin(phi).
  double a() const;
  double b() const;
  /// Strict contraction of the off-diagonal elements.
  bool is_decoherence(double tol = kDefaultTolerance) const {
    return lambda_ < 1.0 - tol;
  }

 private:
  double lambda_ = 1.0;
  double phi_ = 0.0;
};

/// Reduce an angle into [0, 2 pi).
double wrap_angle(double phi);

/// Trace-preserving 4x4 real transfer matrix.
class TransferMatrix {
 public:
  TransferMatrix();  // identity channel

  /// Throws kDimensionMismatch for non-4x4 input and kNotTracePreserving
  /// unless row 0 equals (1, 0, 0, 0) within `tol`.
  explicit TransferMatrix(const RealMatrix& m, double tol = kDefaultTolerance);

  static TransferMatrix identity() { return {}; }

  double operator()(std::size_t k, std::size_t l) const { return m_(k, l); }
  const RealMatrix& matrix() const { return m_; }
  bool is_unital(double tol = kDefaultTolerance) const;

 private:
  RealMatrix m_;
};

BlochVector to_bloch(const DensityMatrix& rho, const DecoherenceBasis& basis = {});

TransferMatrix make_decoherence_channel(const DecoherenceParams& p);

/// Linear action of a 4x4 superoperator (given in the S-frame of `basis`) on
/// an arbitrary 2x2 operator.
ComplexMatrix apply_superoperator(const RealMatrix& e, const ComplexMatrix& x,
                                  const DecoherenceBasis& basis = {});

/// r -> T r + t. Throws kNotCompletelyPositive if the image leaves the Bloch
/// ball by more than `tol`.
DensityMatrix apply(const TransferMatrix& e, const DensityMatrix& rho,
                    const DecoherenceBasis& basis = {},
                    double tol = kDefaultTolerance);

/// outer o inner, i.e. the matrix product outer * inner.
TransferMatrix compose(const TransferMatrix& outer, const TransferMatrix& inner);

/// E^n in closed form: diag(1, lambda^n R_{n phi}, 1).
TransferMatrix power(const DecoherenceParams& p, std::size_t n);

/// E_t = diag(1, lambda^{t/tau} R_{phi t/tau}, 1). Throws kNoGenerator for
/// lambda = 0 and kInvalidParameter for t < 0 or tau <= 0.
TransferMatrix interpolate(const DecoherenceParams& p, double t, double tau = 1.0);

/// Entrywise mu E1 + (1 - mu) E2, mu in [0, 1].
TransferMatrix convex_mix(const TransferMatrix& e1, const TransferMatrix& e2,
                          double mu);

/// Unnormalized Choi matrix sum_jk |j><k| (x) E[|j><k|], input index first.
ComplexMatrix transfer_to_choi(const TransferMatrix& e,
                               const DecoherenceBasis& basis = {});

struct CpVerdict {
  bool completely_positive = false;
  double min_choi_eigenvalue = 0.0;
};

CpVerdict is_completely_positive(const TransferMatrix& e,
                                 const DecoherenceBasis& basis = {},
                                 double tol = kDefaultTolerance);

/// Membership of (l1, l2, l3) in the tetrahedron with vertices (1,1,1),
/// (1,-1,-1), (-1,1,-1), (-1,-1,1): |l1 + l2| <= 1 + l3, |l1 - l2| <= 1 - l3.
bool in_tetrahedron(const std::array<double, 3>& lambdas,
                    double tol = kDefaultTolerance);

struct RotationSvd {
  RealMatrix left;                        // proper rotation R1
  std::array<double, 3> singular_values;  // signed
  RealMatrix right;                       // proper rotation R2
};

/// T = R1 diag(l) R2 for a unital channel; throws kNotUnital otherwise.
RotationSvd svd_decompose(const TransferMatrix& e, double tol = kDefaultTolerance);

/// Re-express a transfer matrix between the S-frame of `basis` and the
/// computational Pauli frame.
TransferMatrix to_computational_frame(const TransferMatrix& e,
                                      const DecoherenceBasis& basis);
TransferMatrix from_computational_frame(const TransferMatrix& e,
                                        const DecoherenceBasis& basis);

struct Classification {
  DecoherenceBasis basis;
  DecoherenceParams params;
};

/// Decide whether `e` (computational frame) is a decoherence channel and
/// recover its basis and (lambda, phi). The axis sign is canonicalized
/// (first of z, x, y with |u_i| > 1e-6 made positive); flipping the axis
/// maps phi to -phi.
std::optional<Classification> classify_decoherence(
    const TransferMatrix& e, double tol = kDefaultTolerance);

}  // namespace qdecoh
