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

#include "qdecoh/channels.hpp"

#include <numbers>

namespace qdecoh {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kAxisSignThreshold = 1e-6;

std::array<ComplexMatrix, 4> operator_basis(const ComplexMatrix& w) {
  std::array<ComplexMatrix, 4> s;
  const ComplexMatrix wd = w.adjoint();
  for (std::size_t j = 0; j < 4; ++j) s[j] = w * pauli::sigma(j) * wd;
  return s;
}

// Hilbert-Schmidt coordinates Tr(S_l X) of a 2x2 operator.
std::array<Complex, 4> coordinates(const ComplexMatrix& x,
                                   const DecoherenceBasis& basis) {
  std::array<Complex, 4> c{};
  for (std::size_t l = 0; l < 4; ++l) c[l] = (basis.s(l) * x).trace();
  return c;
}

RealMatrix rotation_block(double scale, double angle) {
  RealMatrix m = RealMatrix::identity(4);
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  m(1, 1) = scale * c;
  m(1, 2) = scale * s;
  m(2, 1) = -scale * s;
  m(2, 2) = scale * c;
  return m;
}

RealMatrix spatial_block(const TransferMatrix& e) {
  RealMatrix t(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) t(i, j) = e(i + 1, j + 1);
  return t;
}

double det3(const RealMatrix& m) {
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
         m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

std::array<double, 3> column(const RealMatrix& m, std::size_t j) {
  return {m(0, j), m(1, j), m(2, j)};
}

void set_column(RealMatrix& m, std::size_t j, const std::array<double, 3>& v) {
  for (std::size_t i = 0; i < 3; ++i) m(i, j) = v[i];
}

std::array<double, 3> cross(const std::array<double, 3>& a,
                            const std::array<double, 3>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

double dot(const std::array<double, 3>& a, const std::array<double, 3>& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

// Unit vector orthogonal to the unit vector `a`.
std::array<double, 3> any_orthogonal(const std::array<double, 3>& a) {
  std::array<double, 3> e{0.0, 0.0, 0.0};
  std::size_t smallest = 0;
  for (std::size_t i = 1; i < 3; ++i)
    if (std::abs(a[i]) < std::abs(a[smallest])) smallest = i;
  e[smallest] = 1.0;
  auto v = cross(a, e);
  const double n = std::sqrt(dot(v, v));
  for (auto& x : v) x /= n;
  return v;
}

// Eigenvectors of a real symmetric 3x3 matrix, eigenvalues descending.
std::pair<std::vector<double>, RealMatrix> symmetric_eig3(const RealMatrix& m) {
  const HermitianEigen eig = herm_eig(to_complex(m), 1e-6);
  RealMatrix v(3, 3);
  for (std::size_t j = 0; j < 3; ++j) {
    // Real symmetric input keeps every Jacobi phase real, so the columns are
    // real up to a sign.
    std::size_t pivot = 0;
    for (std::size_t i = 1; i < 3; ++i)
      if (std::abs(eig.vectors(i, j)) > std::abs(eig.vectors(pivot, j))) pivot = i;
    const Complex phase = eig.vectors(pivot, j) / std::abs(eig.vectors(pivot, j));
    for (std::size_t i = 0; i < 3; ++i)
      v(i, j) = (eig.vectors(i, j) * std::conj(phase)).real();
  }
  return {eig.values, v};
}

}  // namespace

double BlochVector::norm() const { return std::sqrt(dot(r, r)); }

DecoherenceBasis::DecoherenceBasis()
    : DecoherenceBasis(ComplexMatrix::identity(2)) {}

DecoherenceBasis::DecoherenceBasis(ComplexMatrix w)
    : w_(std::move(w)), s_(operator_basis(w_)) {}

DecoherenceBasis DecoherenceBasis::from_unitary(const ComplexMatrix& w,
                                                double tol) {
  if (w.rows() != 2 || w.cols() != 2) {
    throw Error(ErrorCode::kDimensionMismatch,
                "basis unitary must be 2x2, got " + w.shape_string());
  }
  if (!is_unitary(w, tol)) {
    throw Error(ErrorCode::kNotUnitary, "basis matrix is not unitary");
  }
  return DecoherenceBasis(w);
}

DecoherenceBasis DecoherenceBasis::from_axis(const std::array<double, 3>& axis) {
  const double n = std::sqrt(dot(axis, axis));
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw Error(ErrorCode::kInvalidParameter, "basis axis must be a nonzero vector");
  }
  const double theta = std::acos(std::clamp(axis[2] / n, -1.0, 1.0));
  const double azimuth = std::atan2(axis[1], axis[0]);
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  const Complex e = std::polar(1.0, azimuth);
  ComplexMatrix w{{c, -std::conj(e) * s}, {e * s, c}};
  return DecoherenceBasis(std::move(w));
}

ComplexMatrix DecoherenceBasis::ket(std::size_t k) const {
  if (k > 1) {
    throw Error(ErrorCode::kIndexOutOfRange, "basis vector index must be 0 or 1");
  }
  ComplexMatrix v(2, 1);
  v(0, 0) = w_(0, k);
  v(1, 0) = w_(1, k);
  return v;
}

std::array<double, 3> DecoherenceBasis::axis() const {
  std::array<double, 3> u{};
  for (std::size_t j = 0; j < 3; ++j)
    u[j] = 0.5 * (pauli::sigma(j + 1) * s_[3]).trace().real();
  return u;
}

RealMatrix DecoherenceBasis::frame() const {
  RealMatrix f(4, 4);
  f(0, 0) = 1.0;
  for (std::size_t j = 1; j < 4; ++j)
    for (std::size_t k = 1; k < 4; ++k)
      f(j, k) = 0.5 * (pauli::sigma(j) * s_[k]).trace().real();
  return f;
}

DensityMatrix::DensityMatrix() : m_(ComplexMatrix::identity(2) * Complex{0.5}) {}

DensityMatrix DensityMatrix::from_matrix(const ComplexMatrix& m, double tol) {
  if (m.rows() != 2 || m.cols() != 2) {
    throw Error(ErrorCode::kDimensionMismatch,
                "density matrix must be 2x2, got " + m.shape_string());
  }
  if (hermiticity_defect(m) > tol) {
    throw Error(ErrorCode::kInvalidState, "density matrix is not Hermitian");
  }
  if (std::abs(m.trace() - Complex{1.0}) > tol) {
    throw Error(ErrorCode::kInvalidState, "density matrix trace is not 1");
  }
  ComplexMatrix h = (m + m.adjoint()) * Complex{0.5};
  const auto eig = herm_eig(h, tol);
  if (eig.values.back() < -tol) {
    throw Error(ErrorCode::kInvalidState, "density matrix is not positive");
  }
  return DensityMatrix(std::move(h));
}

DensityMatrix DensityMatrix::from_bloch(const BlochVector& r,
                                        const DecoherenceBasis& basis,
                                        double tol) {
  if (r.norm() > 1.0 + tol) {
    throw Error(ErrorCode::kInvalidState,
                "Bloch vector of length " + std::to_string(r.norm()) +
                    " lies outside the unit ball");
  }
  ComplexMatrix m = basis.s(0);
  for (std::size_t j = 0; j < 3; ++j) m += basis.s(j + 1) * Complex{r[j]};
  m *= Complex{0.5};
  return DensityMatrix(std::move(m));
}

DensityMatrix DensityMatrix::pure(Complex alpha, Complex beta, double tol) {
  if (std::abs(std::norm(alpha) + std::norm(beta) - 1.0) > tol) {
    throw Error(ErrorCode::kInvalidState, "amplitudes are not normalized");
  }
  ComplexMatrix m{{std::norm(alpha), alpha * std::conj(beta)},
                  {beta * std::conj(alpha), std::norm(beta)}};
  return DensityMatrix(std::move(m));
}

double DensityMatrix::purity() const { return (m_ * m_).trace().real(); }

ComplexMatrix DensityMatrix::in_basis(const DecoherenceBasis& basis) const {
  return basis.unitary().adjoint() * m_ * basis.unitary();
}

double wrap_angle(double phi) {
  double w = std::fmod(phi, kTwoPi);
  if (w < 0.0) w += kTwoPi;
  if (w >= kTwoPi) w = 0.0;
  return w;
}

DecoherenceParams::DecoherenceParams(double lambda, double phi) {
  if (!std::isfinite(lambda) || !std::isfinite(phi)) {
    throw Error(ErrorCode::kInvalidParameter, "lambda and phi must be finite");
  }
  if (std::abs(lambda) > 1.0 + kDefaultTolerance) {
    throw Error(ErrorCode::kInvalidParameter,
                "lambda " + std::to_string(lambda) + " outside [-1, 1]");
  }
  if (lambda < 0.0) {
    lambda = -lambda;
    phi += std::numbers::pi;
  }
  lambda_ = std::min(lambda, 1.0);
  phi_ = wrap_angle(phi);
}

double DecoherenceParams::a() const { return lambda_ * std::cos(phi_); }
double DecoherenceParams::b() const { return lambda_ * std::sin(phi_); }

TransferMatrix::TransferMatrix() : m_(RealMatrix::identity(4)) {}

TransferMatrix::TransferMatrix(const RealMatrix& m, double tol) : m_(m) {
  if (m.rows() != 4 || m.cols() != 4) {
    throw Error(ErrorCode::kDimensionMismatch,
                "transfer matrix must be 4x4, got " + m.shape_string());
  }
  for (std::size_t l = 0; l < 4; ++l) {
    const double expected = l == 0 ? 1.0 : 0.0;
    if (!std::isfinite(m(0, l)) || std::abs(m(0, l) - expected) > tol) {
      throw Error(ErrorCode::kNotTracePreserving,
                  "transfer matrix row 0 must be (1, 0, 0, 0)");
    }
  }
  for (double v : m.data()) {
    if (!std::isfinite(v)) {
      throw Error(ErrorCode::kInvalidParameter, "transfer matrix has non-finite entries");
    }
  }
  m_(0, 0) = 1.0;
  for (std::size_t l = 1; l < 4; ++l) m_(0, l) = 0.0;
}

bool TransferMatrix::is_unital(double tol) const {
  for (std::size_t k = 1; k < 4; ++k)
    if (std::abs(m_(k, 0)) > tol) return false;
  return true;
}

BlochVector to_bloch(const DensityMatrix& rho, const DecoherenceBasis& basis) {
  BlochVector r;
  for (std::size_t j = 0; j < 3; ++j)
    r.r[j] = (rho.matrix() * basis.s(j + 1)).trace().real();
  return r;
}

TransferMatrix make_decoherence_channel(const DecoherenceParams& p) {
  return TransferMatrix(rotation_block(p.lambda(), p.phi()));
}

ComplexMatrix apply_superoperator(const RealMatrix& e, const ComplexMatrix& x,
                                  const DecoherenceBasis& basis) {
  if (e.rows() != 4 || e.cols() != 4 || x.rows() != 2 || x.cols() != 2) {
    throw Error(ErrorCode::kDimensionMismatch,
                "superoperator must be 4x4 acting on a 2x2 operator");
  }
  const auto in = coordinates(x, basis);
  ComplexMatrix out(2, 2);
  for (std::size_t k = 0; k < 4; ++k) {
    Complex yk{};
    for (std::size_t l = 0; l < 4; ++l) yk += e(k, l) * in[l];
    out += basis.s(k) * (0.5 * yk);
  }
  return out;
}

DensityMatrix apply(const TransferMatrix& e, const DensityMatrix& rho,
                    const DecoherenceBasis& basis, double tol) {
  const BlochVector r = to_bloch(rho, basis);
  BlochVector out;
  for (std::size_t k = 0; k < 3; ++k) {
    double v = e(k + 1, 0);
    for (std::size_t l = 0; l < 3; ++l) v += e(k + 1, l + 1) * r[l];
    out.r[k] = v;
  }
  if (out.norm() > 1.0 + tol) {
    throw Error(ErrorCode::kNotCompletelyPositive,
                "channel maps a state outside the Bloch ball");
  }
  return DensityMatrix::from_bloch(out, basis, tol);
}

TransferMatrix compose(const TransferMatrix& outer, const TransferMatrix& inner) {
  return TransferMatrix(outer.matrix() * inner.matrix());
}

TransferMatrix power(const DecoherenceParams& p, std::size_t n) {
  const double k = static_cast<double>(n);
  return TransferMatrix(rotation_block(std::pow(p.lambda(), k), k * p.phi()));
}

TransferMatrix interpolate(const DecoherenceParams& p, double t, double tau) {
  if (!(tau > 0.0) || !(t >= 0.0) || !std::isfinite(t) || !std::isfinite(tau)) {
    throw Error(ErrorCode::kInvalidParameter, "need t >= 0 and tau > 0");
  }
  if (p.lambda() == 0.0) {
    throw Error(ErrorCode::kNoGenerator,
                "lambda = 0 admits no continuous semigroup interpolation");
  }
  const double s = t / tau;
  return TransferMatrix(rotation_block(std::exp(s * std::log(p.lambda())), s * p.phi()));
}

TransferMatrix convex_mix(const TransferMatrix& e1, const TransferMatrix& e2,
                          double mu) {
  if (!(mu >= 0.0 && mu <= 1.0)) {
    throw Error(ErrorCode::kInvalidParameter, "mixing weight must lie in [0, 1]");
  }
  return TransferMatrix(e1.matrix() * mu + e2.matrix() * (1.0 - mu));
}

ComplexMatrix transfer_to_choi(const TransferMatrix& e,
                               const DecoherenceBasis& basis) {
  ComplexMatrix choi(4, 4);
  for (std::size_t j = 0; j < 2; ++j) {
    for (std::size_t k = 0; k < 2; ++k) {
      ComplexMatrix unit(2, 2);
      unit(j, k) = 1.0;
      const ComplexMatrix image = apply_superoperator(e.matrix(), unit, basis);
      for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b) choi(2 * j + a, 2 * k + b) = image(a, b);
    }
  }
  return choi;
}

CpVerdict is_completely_positive(const TransferMatrix& e,
                                 const DecoherenceBasis& basis, double tol) {
  const ComplexMatrix choi = transfer_to_choi(e, basis);
  const HermitianEigen eig = herm_eig(choi, 1e-6);
  CpVerdict v;
  v.min_choi_eigenvalue = eig.values.back();
  v.completely_positive = v.min_choi_eigenvalue >= -tol;
  return v;
}

bool in_tetrahedron(const std::array<double, 3>& l, double tol) {
  return std::abs(l[0] + l[1]) <= 1.0 + l[2] + tol &&
         std::abs(l[0] - l[1]) <= 1.0 - l[2] + tol;
}

RotationSvd svd_decompose(const TransferMatrix& e, double tol) {
  if (!e.is_unital(tol)) {
    throw Error(ErrorCode::kNotUnital, "singular-value form needs a unital channel");
  }
  const RealMatrix t = spatial_block(e);
  auto [values, v] = symmetric_eig3(t.transpose() * t);
  if (det3(v) < 0.0) {
    for (std::size_t r = 0; r < 3; ++r) v(r, 2) = -v(r, 2);
  }

  // Left vectors by Gram-Schmidt on T v_i, completed by the cross product so
  // U stays a proper rotation even for tiny or repeated singular values; the
  // sign of the last singular value absorbs det T.
  std::array<std::array<double, 3>, 3> tv{};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < 3; ++c) tv[i][r] += t(r, c) * v(c, i);
  const double cutoff = 1e-12 * std::max(1.0, std::sqrt(std::max(values[0], 0.0)));
  std::array<std::array<double, 3>, 3> uc{};
  for (std::size_t i = 0; i < 2; ++i) {
    std::array<double, 3> w = tv[i];
    for (std::size_t k = 0; k < i; ++k) {
      const double p = dot(uc[k], w);
      for (std::size_t r = 0; r < 3; ++r) w[r] -= p * uc[k][r];
    }
    const double n = std::sqrt(dot(w, w));
    if (n > cutoff) {
      for (std::size_t r = 0; r < 3; ++r) uc[i][r] = w[r] / n;
    } else {
      uc[i] = i == 0 ? std::array<double, 3>{1.0, 0.0, 0.0} : any_orthogonal(uc[0]);
    }
  }
  uc[2] = cross(uc[0], uc[1]);

  std::array<double, 3> sigma{};
  RealMatrix u(3, 3);
  for (std::size_t i = 0; i < 3; ++i) {
    sigma[i] = dot(uc[i], tv[i]);
    set_column(u, i, uc[i]);
  }
  return RotationSvd{u, sigma, v.transpose()};
}

TransferMatrix to_computational_frame(const TransferMatrix& e,
                                      const DecoherenceBasis& basis) {
  const RealMatrix f = basis.frame();
  return TransferMatrix(f * e.matrix() * f.transpose());
}

TransferMatrix from_computational_frame(const TransferMatrix& e,
                                        const DecoherenceBasis& basis) {
  const RealMatrix f = basis.frame();
  return TransferMatrix(f.transpose() * e.matrix() * f);
}

std::optional<Classification> classify_decoherence(const TransferMatrix& e,
                                                   double tol) {
  if (!e.is_unital(tol)) return std::nullopt;

  const RealMatrix t = spatial_block(e);
  const RealMatrix d = t - RealMatrix::identity(3);
  const RealMatrix m = d.transpose() * d + d * d.transpose();
  const auto [values, vectors] = symmetric_eig3(m);
  if (values[2] >= tol) return std::nullopt;

  std::array<double, 3> u = column(vectors, 2);
  for (std::size_t i : {2, 0, 1}) {
    if (std::abs(u[i]) > kAxisSignThreshold) {
      if (u[i] < 0.0) {
        for (auto& x : u) x = -x;
      }
      break;
    }
  }

  const DecoherenceBasis basis = DecoherenceBasis::from_axis(u);
  const TransferMatrix local = from_computational_frame(e, basis);
  if (std::abs(local(3, 3) - 1.0) > tol) return std::nullopt;
  for (std::size_t k : {1, 2}) {
    if (std::abs(local(3, k)) > tol || std::abs(local(k, 3)) > tol) {
      return std::nullopt;
    }
  }
  if (std::abs(local(1, 1) - local(2, 2)) > tol ||
      std::abs(local(1, 2) + local(2, 1)) > tol) {
    return std::nullopt;
  }
  const double a = 0.5 * (local(1, 1) + local(2, 2));
  const double b = 0.5 * (local(1, 2) - local(2, 1));
  const double lambda = std::hypot(a, b);
  if (lambda >= 1.0 - tol) return std::nullopt;
  const double phi = lambda > 0.0 ? std::atan2(b, a) : 0.0;
  return Classification{basis, DecoherenceParams(lambda, phi)};
}

}  // namespace qdecoh
