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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "qdecoh/channels.hpp"
#include "support/oracles.hpp"
#include "support/random.hpp"

namespace qdecoh {
namespace {

using testing::Rng;
constexpr double kPi = std::numbers::pi;

double angle_distance(double a, double b) {
  const double d = std::fmod(std::abs(a - b), 2.0 * kPi);
  return std::min(d, 2.0 * kPi - d);
}

TransferMatrix diag_channel(double l1, double l2, double l3) {
  return TransferMatrix(RealMatrix::diagonal({1.0, l1, l2, l3}));
}

TEST(DecoherenceParams, CanonicalizesNegativeLambda) {
  const DecoherenceParams p(-0.4, 0.3);
  EXPECT_DOUBLE_EQ(p.lambda(), 0.4);
  EXPECT_NEAR(p.phi(), 0.3 + kPi, 1e-15);
  const DecoherenceParams q(0.4, 0.3 + kPi);
  EXPECT_LT(max_abs_diff(make_decoherence_channel(p).matrix(),
                         make_decoherence_channel(q).matrix()),
            1e-15);
  EXPECT_NEAR(DecoherenceParams(0.5, -0.1).phi(), 2.0 * kPi - 0.1, 1e-15);
}

TEST(DecoherenceParams, RejectsOutOfRange) {
  EXPECT_THROW(DecoherenceParams(1.1, 0.0), Error);
  EXPECT_THROW(DecoherenceParams(0.5, std::nan("")), Error);
  EXPECT_FALSE(DecoherenceParams(1.0, 0.2).is_decoherence());
  EXPECT_TRUE(DecoherenceParams(0.999, 0.2).is_decoherence());
}

TEST(DecoherenceChannel, TransferMatrixMatchesTomography) {
  Rng rng(101);
  for (int trial = 0; trial < 20; ++trial) {
    const DecoherenceParams p = testing::random_params(rng);
    const DecoherenceBasis basis = testing::random_basis(rng);
    const RealMatrix e = make_decoherence_channel(p).matrix();
    const RealMatrix tomo = oracle::tomography(
        [&](const ComplexMatrix& x) { return apply_superoperator(e, x, basis); },
        basis.unitary());
    EXPECT_LT(max_abs_diff(tomo, e), 1e-13);
  }
}

TEST(DecoherenceChannel, ContractsOffDiagonalsAndKeepsPopulations) {
  Rng rng(103);
  const DecoherenceParams p(0.6, 1.1);
  const DecoherenceBasis basis = testing::random_basis(rng);
  const DensityMatrix rho = DensityMatrix::from_matrix(testing::random_density(rng));
  const DensityMatrix out = apply(make_decoherence_channel(p), rho, basis);
  const ComplexMatrix before = rho.in_basis(basis);
  const ComplexMatrix after = out.in_basis(basis);
  EXPECT_NEAR(after(0, 0).real(), before(0, 0).real(), 1e-14);
  EXPECT_NEAR(after(1, 1).real(), before(1, 1).real(), 1e-14);
  EXPECT_NEAR(std::abs(after(0, 1)), 0.6 * std::abs(before(0, 1)), 1e-14);
}

TEST(DecoherenceBasis, FrameIsOrthogonalAndAxisMatches) {
  Rng rng(107);
  for (int trial = 0; trial < 10; ++trial) {
    const std::array<double, 3> axis{testing::uniform(rng, -1, 1), testing::uniform(rng, -1, 1),
                                     testing::uniform(rng, -1, 1)};
    const DecoherenceBasis b = DecoherenceBasis::from_axis(axis);
    const double n = std::hypot(axis[0], axis[1], axis[2]);
    for (std::size_t j = 0; j < 3; ++j) EXPECT_NEAR(b.axis()[j], axis[j] / n, 1e-13);
    const RealMatrix f = b.frame();
    EXPECT_LT(max_abs_diff(f * f.transpose(), RealMatrix::identity(4)), 1e-13);
    EXPECT_TRUE(is_unitary(b.unitary()));
  }
  EXPECT_THROW(DecoherenceBasis::from_unitary(ComplexMatrix{{1.0, 1.0}, {0.0, 1.0}}), Error);
}

TEST(TransferMatrix, Validation) {
  RealMatrix bad = RealMatrix::identity(4);
  bad(0, 1) = 0.1;
  try {
    TransferMatrix t(bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotTracePreserving);
  }
  EXPECT_THROW(TransferMatrix(RealMatrix::identity(3)), Error);
  RealMatrix shifted = RealMatrix::identity(4);
  shifted(3, 0) = 0.2;
  EXPECT_FALSE(TransferMatrix(shifted).is_unital());
}

TEST(Apply, RejectsImagesOutsideBlochBall) {
  const DensityMatrix up = DensityMatrix::from_bloch({{0.0, 0.0, 1.0}});
  const TransferMatrix stretch = diag_channel(1.0, 1.0, 1.5);
  try {
    apply(stretch, up);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotCompletelyPositive);
  }
}

TEST(Compose, SameBasisClosure) {
  Rng rng(109);
  for (int trial = 0; trial < 50; ++trial) {
    const DecoherenceParams p1 = testing::random_params(rng);
    const DecoherenceParams p2 = testing::random_params(rng);
    const DecoherenceBasis basis = testing::random_basis(rng);
    const TransferMatrix c = compose(to_computational_frame(make_decoherence_channel(p1), basis),
                                     to_computational_frame(make_decoherence_channel(p2), basis));
    const auto cls = classify_decoherence(c);
    ASSERT_TRUE(cls);
    EXPECT_NEAR(cls->params.lambda(), p1.lambda() * p2.lambda(), 1e-9);
    // The classifier may flip the axis, which negates phi.
    const double phi = wrap_angle(p1.phi() + p2.phi());
    const double sign = (cls->basis.axis()[0] * basis.axis()[0] + cls->basis.axis()[1] * basis.axis()[1] +
                         cls->basis.axis()[2] * basis.axis()[2]) > 0 ? 1.0 : -1.0;
    EXPECT_LT(angle_distance(cls->params.phi(), sign * phi), 1e-9);
  }
}

TEST(Power, MatchesRepeatedComposition) {
  const DecoherenceParams p(0.8, 0.7);
  TransferMatrix acc;
  for (std::size_t n = 0; n < 12; ++n) {
    EXPECT_LT(max_abs_diff(power(p, n).matrix(), acc.matrix()), 1e-13) << n;
    acc = compose(make_decoherence_channel(p), acc);
  }
}

TEST(Interpolate, SemigroupAndEndpoints) {
  const DecoherenceParams p(0.3, 2.0);
  EXPECT_LT(max_abs_diff(interpolate(p, 0.0).matrix(), RealMatrix::identity(4)), 1e-15);
  EXPECT_LT(max_abs_diff(interpolate(p, 1.0).matrix(), make_decoherence_channel(p).matrix()),
            1e-14);
  EXPECT_LT(max_abs_diff(compose(interpolate(p, 0.7, 2.0), interpolate(p, 1.1, 2.0)).matrix(),
                         interpolate(p, 1.8, 2.0).matrix()),
            1e-14);
  try {
    interpolate(DecoherenceParams(0.0, 0.0), 1.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNoGenerator);
  }
  EXPECT_THROW(interpolate(p, -1.0), Error);
}

TEST(Choi, TraceAndHermiticity) {
  Rng rng(113);
  for (int trial = 0; trial < 10; ++trial) {
    const TransferMatrix e = make_decoherence_channel(testing::random_params(rng));
    const ComplexMatrix choi = transfer_to_choi(e, testing::random_basis(rng));
    EXPECT_NEAR(choi.trace().real(), 2.0, 1e-13);
    EXPECT_TRUE(is_hermitian(choi, 1e-13));
    // Partial trace over the output leaves the identity on the input.
    EXPECT_LT(max_abs_diff(partial_trace(choi, {2}, {0}), ComplexMatrix::identity(2)), 1e-13);
  }
}

TEST(Choi, IdentityGivesUnnormalizedBellProjector) {
  const ComplexMatrix choi = transfer_to_choi(TransferMatrix::identity());
  ComplexMatrix expected(4, 4);
  for (std::size_t a : {0u, 3u})
    for (std::size_t b : {0u, 3u}) expected(a, b) = 1.0;
  EXPECT_LT(max_abs_diff(choi, expected), 1e-15);
}

TEST(CompletePositivity, KnownChannels) {
  EXPECT_TRUE(is_completely_positive(diag_channel(1, 1, 1)).completely_positive);
  const CpVerdict transpose = is_completely_positive(diag_channel(1, -1, 1));
  EXPECT_FALSE(transpose.completely_positive);
  EXPECT_NEAR(transpose.min_choi_eigenvalue, -1.0, 1e-12);
  // Depolarizing with p = -1/3 sits on the boundary (one zero Choi eigenvalue).
  const CpVerdict edge = is_completely_positive(diag_channel(-1.0 / 3, -1.0 / 3, -1.0 / 3));
  EXPECT_TRUE(edge.completely_positive);
  EXPECT_NEAR(edge.min_choi_eigenvalue, 0.0, 1e-12);
  EXPECT_FALSE(is_completely_positive(diag_channel(-0.34, -0.34, -0.34)).completely_positive);
}

TEST(CompletePositivity, AgreesWithTetrahedronOnGrid) {
  int disagreements = 0;
  for (int i = 0; i <= 10; ++i)
    for (int j = 0; j <= 10; ++j)
      for (int k = 0; k <= 10; ++k) {
        const std::array<double, 3> l{-1.0 + 0.2 * i, -1.0 + 0.2 * j, -1.0 + 0.2 * k};
        const bool cp =
            is_completely_positive(diag_channel(l[0], l[1], l[2])).completely_positive;
        if (cp != in_tetrahedron(l)) ++disagreements;
      }
  EXPECT_EQ(disagreements, 0);
}

TEST(CompletePositivity, InvariantUnderBasisChoice) {
  Rng rng(127);
  for (int trial = 0; trial < 10; ++trial) {
    const TransferMatrix e = diag_channel(testing::uniform(rng, -1, 1), testing::uniform(rng, -1, 1),
                                          testing::uniform(rng, -1, 1));
    const DecoherenceBasis basis = testing::random_basis(rng);
    const CpVerdict a = is_completely_positive(e);
    const CpVerdict b = is_completely_positive(e, basis);
    EXPECT_EQ(a.completely_positive, b.completely_positive);
    EXPECT_NEAR(a.min_choi_eigenvalue, b.min_choi_eigenvalue, 1e-12);
  }
}

TEST(Svd, ReconstructsWithProperRotations) {
  Rng rng(131);
  for (int trial = 0; trial < 30; ++trial) {
    const DecoherenceBasis b1 = testing::random_basis(rng);
    const DecoherenceBasis b2 = testing::random_basis(rng);
    const TransferMatrix d = diag_channel(testing::uniform(rng, -1, 1), testing::uniform(rng, -1, 1),
                                          testing::uniform(rng, -1, 1));
    const TransferMatrix rotated(b1.frame() * d.matrix() * b2.frame().transpose());
    const RotationSvd svd = svd_decompose(rotated);
    RealMatrix t(3, 3), l(3, 3);
    for (std::size_t i = 0; i < 3; ++i) {
      l(i, i) = svd.singular_values[i];
      for (std::size_t j = 0; j < 3; ++j) t(i, j) = rotated(i + 1, j + 1);
    }
    EXPECT_LT(max_abs_diff(svd.left * l * svd.right, t), 1e-12);
    for (const RealMatrix* r : {&svd.left, &svd.right}) {
      EXPECT_LT(max_abs_diff(*r * r->transpose(), RealMatrix::identity(3)), 1e-12);
      const RealMatrix& m = *r;
      const double det = m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
                         m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
                         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
      EXPECT_NEAR(det, 1.0, 1e-12);
    }
  }
  RealMatrix shifted = RealMatrix::identity(4);
  shifted(1, 0) = 0.1;
  EXPECT_THROW(svd_decompose(TransferMatrix(shifted)), Error);
}

TEST(Frames, RoundTrip) {
  Rng rng(137);
  const DecoherenceBasis basis = testing::random_basis(rng);
  const TransferMatrix e = make_decoherence_channel(DecoherenceParams(0.4, 0.9));
  EXPECT_LT(max_abs_diff(
                from_computational_frame(to_computational_frame(e, basis), basis).matrix(),
                e.matrix()),
            1e-14);
}

TEST(Classify, RoundTripRandom) {
  Rng rng(139);
  for (int trial = 0; trial < 100; ++trial) {
    const DecoherenceParams p = testing::random_params(rng);
    const DecoherenceBasis basis = testing::random_basis(rng);
    const auto cls =
        classify_decoherence(to_computational_frame(make_decoherence_channel(p), basis));
    ASSERT_TRUE(cls);
    EXPECT_NEAR(cls->params.lambda(), p.lambda(), 1e-9);
    const auto& u = cls->basis.axis();
    const auto& v = basis.axis();
    const double dot = u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
    EXPECT_NEAR(std::abs(dot), 1.0, 1e-9);
    EXPECT_LT(angle_distance(cls->params.phi(), dot > 0 ? p.phi() : -p.phi()), 1e-9);
  }
}

TEST(Classify, ComputationalBasisAndLabels) {
  const auto cls = classify_decoherence(make_decoherence_channel(DecoherenceParams(0.5, 0.3)));
  ASSERT_TRUE(cls);
  EXPECT_NEAR(cls->params.lambda(), 0.5, 1e-12);
  EXPECT_NEAR(cls->params.phi(), 0.3, 1e-12);
  EXPECT_NEAR(cls->basis.axis()[2], 1.0, 1e-12);
}

TEST(Classify, RejectsNonDecoherenceChannels) {
  EXPECT_FALSE(classify_decoherence(diag_channel(0.5, 0.5, 0.5)));  // depolarizing
  RealMatrix amp = RealMatrix::diagonal({1.0, 0.8, 0.8, 0.64});
  amp(3, 0) = 0.36;  // amplitude damping
  EXPECT_FALSE(classify_decoherence(TransferMatrix(amp)));
  // Rotation about x seen in the z frame keeps the x axis only.
  const DecoherenceBasis xb = DecoherenceBasis::from_axis({1.0, 0.0, 0.0});
  const auto cls = classify_decoherence(
      to_computational_frame(make_decoherence_channel(DecoherenceParams(0.9, 0.0)), xb));
  ASSERT_TRUE(cls);
  EXPECT_NEAR(std::abs(cls->basis.axis()[0]), 1.0, 1e-12);
}

}  // namespace
}  // namespace qdecoh
