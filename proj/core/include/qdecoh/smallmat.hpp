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

// Small dense complex linear algebra for qubit-sized problems: operators on a
// handful of qubits, 4x4 transfer matrices and statevectors of up to 20
// qubits. Matrices are row-major and compared only through explicit
// tolerances.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "qdecoh/error.hpp"

namespace qdecoh {

using Complex = std::complex<double>;

inline constexpr double kDefaultTolerance = 1e-9;

template <typename T>
class Matrix {
 public:
  using value_type = T;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "matrix data size does not match rows*cols");
    }
  }
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) {
        throw Error(ErrorCode::kDimensionMismatch, "ragged matrix literal");
      }
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T{1};
    return m;
  }

  static Matrix diagonal(std::initializer_list<T> values) {
    Matrix m(values.size(), values.size());
    std::size_t i = 0;
    for (const T& v : values) {
      m(i, i) = v;
      ++i;
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return data_.size(); }
  bool is_square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<T> data() noexcept { return data_; }
  std::span<const T> data() const noexcept { return data_; }

  Matrix transpose() const {
    Matrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
    return out;
  }

  Matrix conj() const {
    Matrix out = *this;
    if constexpr (!std::is_floating_point_v<T>) {
      for (auto& v : out.data_) v = std::conj(v);
    }
    return out;
  }

  Matrix adjoint() const { return transpose().conj(); }

  T trace() const {
    require_square("trace");
    T t{};
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }

  Matrix& operator+=(const Matrix& o) {
    require_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    require_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  Matrix& operator*=(const T& s) {
    for (auto& v : data_) v *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
  friend Matrix operator*(const T& s, Matrix a) { return a *= s; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "matrix product of " + a.shape_string() + " and " +
                      b.shape_string());
    }
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T aik = a(i, k);
        if (aik == T{}) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
      }
    }
    return out;
  }

  std::string shape_string() const {
    return std::to_string(rows_) + "x" + std::to_string(cols_);
  }

 private:
  void require_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "shape " + shape_string() + " vs " + o.shape_string());
    }
  }
  void require_square(const char* what) const {
    if (!is_square()) {
      throw Error(ErrorCode::kDimensionMismatch,
                  std::string(what) + " needs a square matrix, got " +
                      shape_string());
    }
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using ComplexMatrix = Matrix<Complex>;
using RealMatrix = Matrix<double>;

/// Largest entrywise |a - b|; throws on shape mismatch.
template <typename T>
double max_abs_diff(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "shape " + a.shape_string() + " vs " + b.shape_string());
  }
  double m = 0.0;
  auto da = a.data();
  auto db = b.data();
  for (std::size_t i = 0; i < da.size(); ++i) {
    m = std::max(m, std::abs(da[i] - db[i]));
  }
  return m;
}

template <typename T>
bool approx_equal(const Matrix<T>& a, const Matrix<T>& b, double tol) {
  return a.rows() == b.rows() && a.cols() == b.cols() &&
         max_abs_diff(a, b) <= tol;
}

template <typename T>
double frobenius_norm(const Matrix<T>& m) {
  double s = 0.0;
  for (const auto& v : m.data()) s += std::norm(v);
  return std::sqrt(s);
}

template <typename T>
Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const T aij = a(i, j);
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return out;
}

ComplexMatrix to_complex(const RealMatrix& m);
RealMatrix real_part(const ComplexMatrix& m);

/// max |H - H^dagger| entry; throws if H is not square.
double hermiticity_defect(const ComplexMatrix& h);
bool is_hermitian(const ComplexMatrix& h, double tol = kDefaultTolerance);
bool is_unitary(const ComplexMatrix& u, double tol = kDefaultTolerance);

/// Qubit 0 is the leftmost tensor factor (most significant index bit).
struct QubitRegisterShape {
  std::size_t num_qubits = 0;

  std::size_t dimension() const noexcept { return std::size_t{1} << num_qubits; }

  /// Throws kDimensionMismatch unless dim is a power of two.
  static QubitRegisterShape for_dimension(std::size_t dim);
};

/// Reduced operator on the qubits in `keep`, ordered ascending.
ComplexMatrix partial_trace(const ComplexMatrix& m, QubitRegisterShape shape,
                            std::vector<std::size_t> keep);

/// Reduced density matrix of the pure state `psi` on the qubits in `keep`,
/// without forming |psi><psi|.
ComplexMatrix reduced_density_matrix(std::span<const Complex> psi,
                                     QubitRegisterShape shape,
                                     std::vector<std::size_t> keep);

struct HermitianEigen {
  std::vector<double> values;  // descending
  ComplexMatrix vectors;       // column i belongs to values[i]
};

/// Cyclic complex Jacobi. Throws kNotHermitian if max|H - H^dagger| > tol.
HermitianEigen herm_eig(const ComplexMatrix& h, double tol = kDefaultTolerance);

/// Principal square root of a PSD matrix. Eigenvalues in [-10 tol, 0) are
/// clamped to zero; anything below throws kNotPositive.
ComplexMatrix psd_sqrt(const ComplexMatrix& p, double tol = kDefaultTolerance);

/// exp(A) by scaling and squaring with an order-12 Taylor series.
RealMatrix expm(const RealMatrix& a);

namespace pauli {
ComplexMatrix identity();
ComplexMatrix x();
ComplexMatrix y();
ComplexMatrix z();
/// sigma_0 = I, sigma_1..3 = X, Y, Z.
ComplexMatrix sigma(std::size_t j);
}  // namespace pauli

}  // namespace qdecoh
