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

#include "qdecoh/lindblad.hpp"

#include <cmath>

namespace qdecoh {
namespace {

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a * b - b * a;
}

void check_grid(std::span<const double> t_grid) {
  double prev = 0.0;
  for (double t : t_grid) {
    if (!std::isfinite(t) || t < 0.0) {
      throw Error(ErrorCode::kInvalidParameter, "grid times must be finite and >= 0");
    }
    if (t < prev) {
      throw Error(ErrorCode::kInvalidParameter, "grid times must be nondecreasing");
    }
    prev = t;
  }
}

void require_evolvable(const Generator& g, double tol) {
  const GeneratorDiagnosis diag = validate_decoherence_generator(g, tol);
  if (!diag.valid && !diag.unitary_limit) {
    throw Error(ErrorCode::kInvalidGenerator, diag.reason);
  }
}

std::array<double, 4> multiply(const RealMatrix& g, const std::array<double, 4>& x) {
  std::array<double, 4> y{};
  for (std::size_t k = 0; k < 4; ++k)
    for (std::size_t l = 0; l < 4; ++l) y[k] += g(k, l) * x[l];
  return y;
}

}  // namespace

Generator::Generator(const RealMatrix& g) : g_(g) {
  if (g.rows() != 4 || g.cols() != 4) {
    throw Error(ErrorCode::kDimensionMismatch,
                "generator must be 4x4, got " + g.shape_string());
  }
}

RealMatrix LindbladSpec::d() const {
  RealMatrix out(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) out(i, j) = c(i, j).real();
  return out;
}

RealMatrix LindbladSpec::e() const {
  RealMatrix out(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) out(i, j) = -c(i, j).imag();
  return out;
}

double LindbladSpec::min_coefficient_eigenvalue() const {
  return herm_eig(c, 1e-6).values.back();
}

Generator generator_from_params(const DecoherenceParams& p, double tau) {
  if (!(tau > 0.0) || !std::isfinite(tau)) {
    throw Error(ErrorCode::kInvalidParameter, "tau must be positive");
  }
  if (p.lambda() == 0.0) {
    throw Error(ErrorCode::kNoGenerator,
                "lambda = 0 has no finite-rate generator (instantaneous dephasing)");
  }
  RealMatrix g(4, 4);
  const double rate = std::log(p.lambda()) / tau;
  const double omega = p.phi() / tau;
  g(1, 1) = rate;
  g(1, 2) = omega;
  g(2, 1) = -omega;
  g(2, 2) = rate;
  return Generator(g);
}

TransferMatrix propagator(const Generator& g, double t) {
  return TransferMatrix(expm(g.matrix() * t));
}

LindbladSpec generator_to_lindblad(const Generator& gen, double tol) {
  for (std::size_t l = 0; l < 4; ++l) {
    if (std::abs(gen(0, l)) > tol) {
      throw Error(ErrorCode::kNotTracePreserving, "generator row 0 must vanish");
    }
  }
  const auto g = [&](std::size_t k, std::size_t l) { return gen(k, l); };
  LindbladSpec spec;
  spec.h = {(g(3, 2) - g(2, 3)) / 4.0, (g(1, 3) - g(3, 1)) / 4.0,
            (g(2, 1) - g(1, 2)) / 4.0};

  RealMatrix d(3, 3);
  d(0, 0) = (g(1, 1) - g(2, 2) - g(3, 3)) / 4.0;
  d(1, 1) = (g(2, 2) - g(1, 1) - g(3, 3)) / 4.0;
  d(2, 2) = (g(3, 3) - g(1, 1) - g(2, 2)) / 4.0;
  d(0, 1) = d(1, 0) = (g(1, 2) + g(2, 1)) / 4.0;
  d(1, 2) = d(2, 1) = (g(2, 3) + g(3, 2)) / 4.0;
  d(0, 2) = d(2, 0) = (g(1, 3) + g(3, 1)) / 4.0;

  RealMatrix e(3, 3);
  e(1, 2) = g(1, 0) / 4.0;
  e(2, 0) = g(2, 0) / 4.0;
  e(0, 1) = g(3, 0) / 4.0;
  e(2, 1) = -e(1, 2);
  e(0, 2) = -e(2, 0);
  e(1, 0) = -e(0, 1);

  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) spec.c(i, j) = Complex{d(i, j), -e(i, j)};
  return spec;
}

GeneratorDiagnosis validate_decoherence_generator(const Generator& g, double tol) {
  GeneratorDiagnosis diag;
  for (std::size_t k = 0; k < 4; ++k) {
    for (std::size_t outer : {std::size_t{0}, std::size_t{3}}) {
      if (std::abs(g(outer, k)) > tol || std::abs(g(k, outer)) > tol) {
        diag.reason = "generator must not touch the trace or the S_3 component";
        return diag;
      }
    }
  }
  const double a = g(1, 1);
  const double b = g(1, 2);
  const double c = g(2, 1);
  const double d = g(2, 2);
  if (std::abs(a - d) > tol) {
    diag.reason = "unequal diagonal entries make the coefficient matrix indefinite";
    return diag;
  }
  if (std::abs(b + c) > tol) {
    diag.reason = "off-diagonal entries are not antisymmetric";
    return diag;
  }
  if (std::abs(a) <= tol) {
    diag.unitary_limit = true;
    diag.reason = "no dissipation: pure precession about S_3";
    return diag;
  }
  if (a > 0.0) {
    diag.reason = "positive diagonal entry would amplify coherences";
    return diag;
  }
  diag.valid = true;
  return diag;
}

ComplexMatrix apply_generator(const Generator& g, const ComplexMatrix& x,
                              const DecoherenceBasis& basis) {
  return apply_superoperator(g.matrix(), x, basis);
}

std::vector<DensityMatrix> evolve(const Generator& g, const DensityMatrix& rho0,
                                  std::span<const double> t_grid,
                                  const DecoherenceBasis& basis, double tol) {
  require_evolvable(g, tol);
  check_grid(t_grid);
  const double rate = 0.5 * (g(1, 1) + g(2, 2));
  const double omega = 0.5 * (g(1, 2) - g(2, 1));
  const BlochVector r0 = to_bloch(rho0, basis);

  std::vector<DensityMatrix> states;
  states.reserve(t_grid.size());
  for (double t : t_grid) {
    const double scale = std::exp(rate * t);
    const double c = std::cos(omega * t);
    const double s = std::sin(omega * t);
    BlochVector r;
    r.r = {scale * (c * r0[0] + s * r0[1]), scale * (-s * r0[0] + c * r0[1]), r0[2]};
    states.push_back(DensityMatrix::from_bloch(r, basis, tol));
  }
  return states;
}

std::vector<DensityMatrix> evolve_rk4(const Generator& g, const DensityMatrix& rho0,
                                      std::span<const double> t_grid,
                                      const DecoherenceBasis& basis, double step,
                                      double tol) {
  require_evolvable(g, tol);
  check_grid(t_grid);
  if (!(step > 0.0)) {
    throw Error(ErrorCode::kInvalidParameter, "integration step must be positive");
  }
  const RealMatrix& m = g.matrix();
  const BlochVector r0 = to_bloch(rho0, basis);
  std::array<double, 4> x{1.0, r0[0], r0[1], r0[2]};
  double now = 0.0;

  std::vector<DensityMatrix> states;
  states.reserve(t_grid.size());
  for (double target : t_grid) {
    const double span = target - now;
    const auto substeps = static_cast<std::size_t>(std::ceil(span / step - 1e-12));
    if (substeps > 0) {
      const double h = span / static_cast<double>(substeps);
      for (std::size_t i = 0; i < substeps; ++i) {
        std::array<double, 4> tmp{};
        const auto k1 = multiply(m, x);
        for (std::size_t j = 0; j < 4; ++j) tmp[j] = x[j] + 0.5 * h * k1[j];
        const auto k2 = multiply(m, tmp);
        for (std::size_t j = 0; j < 4; ++j) tmp[j] = x[j] + 0.5 * h * k2[j];
        const auto k3 = multiply(m, tmp);
        for (std::size_t j = 0; j < 4; ++j) tmp[j] = x[j] + h * k3[j];
        const auto k4 = multiply(m, tmp);
        for (std::size_t j = 0; j < 4; ++j)
          x[j] += h / 6.0 * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);
      }
    }
    now = target;
    BlochVector r;
    r.r = {x[1], x[2], x[3]};
    states.push_back(DensityMatrix::from_bloch(r, basis, tol));
  }
  return states;
}

DoubleCommutatorForm to_double_commutator(const Generator& g,
                                          const DecoherenceBasis& basis, double tol) {
  const GeneratorDiagnosis diag = validate_decoherence_generator(g, tol);
  if (diag.unitary_limit) {
    throw Error(ErrorCode::kDegenerateForm,
                "no dissipation: gamma diverges in the unitary limit");
  }
  if (!diag.valid) throw Error(ErrorCode::kInvalidGenerator, diag.reason);
  const double a = g(1, 1);
  const double b = g(1, 2);
  if (std::abs(b) <= tol) {
    throw Error(ErrorCode::kDegenerateForm,
                "b = 0: pure dephasing has no double-commutator form");
  }
  DoubleCommutatorForm form;
  form.h3 = -0.5 * b;
  form.h = basis.s(3) * Complex{form.h3};
  form.gamma = -b * b / (2.0 * a);
  return form;
}

ComplexMatrix apply_double_commutator(const DoubleCommutatorForm& form,
                                      const ComplexMatrix& rho) {
  const ComplexMatrix inner = commutator(form.h, rho);
  return inner * Complex{0.0, -1.0} -
         commutator(form.h, inner) * Complex{1.0 / (2.0 * form.gamma)};
}

}  // namespace qdecoh
