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

#include "qdecoh/smallmat.hpp"

#include <numeric>

namespace qdecoh {
namespace {

constexpr std::size_t kMaxJacobiSweeps = 100;

// Row-of-index table: full_index[rest * keep_dim + kept] is the register
// index whose kept qubits spell `kept` and whose remaining qubits spell `rest`.
struct SplitIndex {
  std::size_t keep_dim = 0;
  std::size_t rest_dim = 0;
  std::vector<std::size_t> full_index;
};

SplitIndex split_register(QubitRegisterShape shape,
                          std::vector<std::size_t>& keep) {
  std::sort(keep.begin(), keep.end());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] >= shape.num_qubits) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  "keep index " + std::to_string(keep[i]) + " outside a " +
                      std::to_string(shape.num_qubits) + "-qubit register");
    }
    if (i > 0 && keep[i] == keep[i - 1]) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  "duplicate keep index " + std::to_string(keep[i]));
    }
  }
  std::vector<bool> kept(shape.num_qubits, false);
  for (auto q : keep) kept[q] = true;

  SplitIndex s;
  s.keep_dim = std::size_t{1} << keep.size();
  s.rest_dim = shape.dimension() / s.keep_dim;
  s.full_index.assign(shape.dimension(), 0);
  const std::size_t n = shape.num_qubits;
  for (std::size_t idx = 0; idx < shape.dimension(); ++idx) {
    std::size_t k = 0;
    std::size_t r = 0;
    for (std::size_t q = 0; q < n; ++q) {
      const std::size_t bit = (idx >> (n - 1 - q)) & 1U;
      if (kept[q]) {
        k = (k << 1) | bit;
      } else {
        r = (r << 1) | bit;
      }
    }
    s.full_index[r * s.keep_dim + k] = idx;
  }
  return s;
}

}  // namespace

ComplexMatrix to_complex(const RealMatrix& m) {
  ComplexMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  return out;
}

RealMatrix real_part(const ComplexMatrix& m) {
  RealMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).real();
  return out;
}

double hermiticity_defect(const ComplexMatrix& h) {
  if (!h.is_square()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "expected a square matrix, got " + h.shape_string());
  }
  double defect = 0.0;
  for (std::size_t i = 0; i < h.rows(); ++i)
    for (std::size_t j = i; j < h.cols(); ++j)
      defect = std::max(defect, std::abs(h(i, j) - std::conj(h(j, i))));
  return defect;
}

bool is_hermitian(const ComplexMatrix& h, double tol) {
  return h.is_square() && hermiticity_defect(h) <= tol;
}

bool is_unitary(const ComplexMatrix& u, double tol) {
  if (!u.is_square()) return false;
  return max_abs_diff(u.adjoint() * u, ComplexMatrix::identity(u.rows())) <= tol;
}

QubitRegisterShape QubitRegisterShape::for_dimension(std::size_t dim) {
  if (dim == 0 || (dim & (dim - 1)) != 0) {
    throw Error(ErrorCode::kDimensionMismatch,
                "dimension " + std::to_string(dim) + " is not a power of two");
  }
  QubitRegisterShape shape;
  while ((std::size_t{1} << shape.num_qubits) < dim) ++shape.num_qubits;
  return shape;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, QubitRegisterShape shape,
                            std::vector<std::size_t> keep) {
  if (!m.is_square() || m.rows() != shape.dimension()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "partial trace of a " + m.shape_string() + " operator on " +
                    std::to_string(shape.num_qubits) + " qubits");
  }
  const SplitIndex s = split_register(shape, keep);
  ComplexMatrix out(s.keep_dim, s.keep_dim);
  for (std::size_t r = 0; r < s.rest_dim; ++r) {
    const std::size_t* row = &s.full_index[r * s.keep_dim];
    for (std::size_t a = 0; a < s.keep_dim; ++a)
      for (std::size_t b = 0; b < s.keep_dim; ++b) out(a, b) += m(row[a], row[b]);
  }
  return out;
}

ComplexMatrix reduced_density_matrix(std::span<const Complex> psi,
                                     QubitRegisterShape shape,
                                     std::vector<std::size_t> keep) {
  if (psi.size() != shape.dimension()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "statevector of length " + std::to_string(psi.size()) +
                    " on " + std::to_string(shape.num_qubits) + " qubits");
  }
  const SplitIndex s = split_register(shape, keep);
  ComplexMatrix out(s.keep_dim, s.keep_dim);
  for (std::size_t r = 0; r < s.rest_dim; ++r) {
    const std::size_t* row = &s.full_index[r * s.keep_dim];
    for (std::size_t a = 0; a < s.keep_dim; ++a) {
      const Complex pa = psi[row[a]];
      if (pa == Complex{}) continue;
      for (std::size_t b = 0; b < s.keep_dim; ++b)
        out(a, b) += pa * std::conj(psi[row[b]]);
    }
  }
  return out;
}

HermitianEigen herm_eig(const ComplexMatrix& h, double tol) {
  const double defect = hermiticity_defect(h);
  if (defect > tol) {
    throw Error(ErrorCode::kNotHermitian,
                "matrix is not Hermitian (defect " + std::to_string(defect) + ")");
  }
  const std::size_t n = h.rows();
  ComplexMatrix a = (h + h.adjoint()) * Complex{0.5};
  ComplexMatrix v = ComplexMatrix::identity(n);

  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q)
        if (p != q) s += std::norm(a(p, q));
    return std::sqrt(s);
  };
  // Off-diagonal Frobenius norm target, relative to the matrix norm.
  const double threshold = 1e-14 * std::max(1.0, frobenius_norm(a));

  for (std::size_t sweep = 0; sweep < kMaxJacobiSweeps; ++sweep) {
    if (off_norm() <= threshold) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag == 0.0) continue;
        const Complex phase = apq / mag;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * mag);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        // J = diag(1, conj(phase)) * [[c, s], [-s, c]] on the (p, q) plane.
        const Complex jpp = c;
        const Complex jpq = s;
        const Complex jqp = -s * std::conj(phase);
        const Complex jqq = c * std::conj(phase);

        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = akp * jpp + akq * jqp;
          a(k, q) = akp * jpq + akq * jqq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = std::conj(jpp) * apk + std::conj(jqp) * aqk;
          a(q, k) = std::conj(jpq) * apk + std::conj(jqq) * aqk;
        }
        a(p, q) = Complex{};
        a(q, p) = Complex{};
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        for (std::size_t k = 0; k < n; ++k) {
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q);
          v(k, p) = vkp * jpp + vkq * jqp;
          v(k, q) = vkp * jpq + vkq * jqq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i).real() > a(j, j).real();
  });
  HermitianEigen out;
  out.values.reserve(n);
  out.vectors = ComplexMatrix(n, n);
  for (std::size_t col = 0; col < n; ++col) {
    out.values.push_back(a(order[col], order[col]).real());
    for (std::size_t k = 0; k < n; ++k) out.vectors(k, col) = v(k, order[col]);
  }
  return out;
}

ComplexMatrix psd_sqrt(const ComplexMatrix& p, double tol) {
  const HermitianEigen eig = herm_eig(p, tol);
  const std::size_t n = p.rows();
  ComplexMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const double lam = eig.values[i];
    if (lam < -10.0 * tol) {
      throw Error(ErrorCode::kNotPositive,
                  "eigenvalue " + std::to_string(lam) + " is significantly negative");
    }
    const double root = std::sqrt(std::max(0.0, lam));
    if (root == 0.0) continue;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        out(r, c) += root * eig.vectors(r, i) * std::conj(eig.vectors(c, i));
  }
  return out;
}

RealMatrix expm(const RealMatrix& a) {
  if (!a.is_square()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "expm needs a square matrix, got " + a.shape_string());
  }
  const std::size_t n = a.rows();
  double norm = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < n; ++j) row += std::abs(a(i, j));
    norm = std::max(norm, row);
  }
  int squarings = 0;
  while (norm / std::ldexp(1.0, squarings) >= 0.5) ++squarings;
  const RealMatrix scaled = a * std::ldexp(1.0, -squarings);

  RealMatrix result = RealMatrix::identity(n);
  RealMatrix term = RealMatrix::identity(n);
  for (int k = 1; k <= 12; ++k) {
    term = term * scaled;
    term *= 1.0 / k;
    result += term;
  }
  for (int s = 0; s < squarings; ++s) result = result * result;
  return result;
}

namespace pauli {

ComplexMatrix identity() { return ComplexMatrix::identity(2); }
ComplexMatrix x() { return ComplexMatrix{{0.0, 1.0}, {1.0, 0.0}}; }
ComplexMatrix y() {
  return ComplexMatrix{{0.0, Complex{0.0, -1.0}}, {Complex{0.0, 1.0}, 0.0}};
}
ComplexMatrix z() { return ComplexMatrix{{1.0, 0.0}, {0.0, -1.0}}; }

ComplexMatrix sigma(std::size_t j) {
  switch (j) {
    case 0:
      return identity();
    case 1:
      return x();
    case 2:
      return y();
    case 3:
      return z();
    default:
      throw Error(ErrorCode::kIndexOutOfRange,
                  "Pauli index " + std::to_string(j) + " not in 0..3");
  }
}

}  // namespace pauli
}  // namespace qdecoh
