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

#include "qdecoh/entanglement.hpp"
#include "support/oracles.hpp"
#include "support/random.hpp"

namespace qdecoh {
namespace {

using testing::Rng;

std::vector<Complex> amplitudes(const PureMultiQubitState& s) {
  return {s.amplitudes().begin(), s.amplitudes().end()};
}

PureMultiQubitState w_state(std::size_t n) {
  std::vector<Complex> psi(std::size_t{1} << n);
  for (std::size_t q = 0; q < n; ++q) psi[std::size_t{1} << q] = 1.0 / std::sqrt(double(n));
  return PureMultiQubitState(psi);
}

PureMultiQubitState ghz_state(std::size_t n) {
  std::vector<Complex> psi(std::size_t{1} << n);
  psi.front() = psi.back() = 1.0 / std::sqrt(2.0);
  return PureMultiQubitState(psi);
}

TEST(PureState, Validation) {
  EXPECT_THROW(PureMultiQubitState(std::vector<Complex>{1.0, 0.0, 0.0}), Error);
  EXPECT_THROW(PureMultiQubitState(std::vector<Complex>{1.0, 1.0}), Error);
  try {
    PureMultiQubitState(std::vector<Complex>(std::size_t{1} << 21));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kRegisterTooLarge);
  }
}

TEST(Concurrence, PureStatesMatchClosedForm) {
  Rng rng(401);
  for (int trial = 0; trial < 50; ++trial) {
    const auto psi = testing::random_ket(rng, 4);
    ComplexMatrix rho(4, 4);
    for (std::size_t a = 0; a < 4; ++a)
      for (std::size_t b = 0; b < 4; ++b) rho(a, b) = psi[a] * std::conj(psi[b]);
    EXPECT_NEAR(concurrence(rho), oracle::pure_concurrence(psi), 1e-12);
  }
}

TEST(Concurrence, MixedStatesMatchCharacteristicPolynomial) {
  Rng rng(403);
  for (std::size_t rank : {2u, 3u, 4u}) {
    for (int trial = 0; trial < 30; ++trial) {
      const ComplexMatrix rho = testing::random_density(rng, 4, rank);
      EXPECT_NEAR(concurrence(rho), oracle::concurrence_charpoly(rho, rank), 1e-9);
    }
  }
}

TEST(Concurrence, KnownStates) {
  ComplexMatrix bell(4, 4);
  for (std::size_t a : {0u, 3u})
    for (std::size_t b : {0u, 3u}) bell(a, b) = 0.5;
  EXPECT_NEAR(concurrence(bell), 1.0, 1e-14);
  // Werner state p |Bell><Bell| + (1 - p) I/4 has C = max(0, (3p - 1)/2).
  for (double p : {0.1, 1.0 / 3.0, 0.5, 0.6, 0.9}) {
    const ComplexMatrix werner = bell * Complex{p} + ComplexMatrix::identity(4) * Complex{(1 - p) / 4};
    EXPECT_NEAR(concurrence(werner), std::max(0.0, (3 * p - 1) / 2), 1e-12) << p;
  }
  EXPECT_NEAR(concurrence(ComplexMatrix::diagonal({1.0, 0.0, 0.0, 0.0})), 0.0, 1e-15);
  const auto l = wootters_lambdas(bell);
  EXPECT_NEAR(l[0], 1.0, 1e-14);
  EXPECT_NEAR(l[1], 0.0, 1e-14);
}

TEST(Concurrence, InvalidInput) {
  EXPECT_THROW(concurrence(ComplexMatrix::identity(2)), Error);
  EXPECT_THROW(concurrence(ComplexMatrix::identity(4)), Error);
  EXPECT_THROW(concurrence(ComplexMatrix::diagonal({1.5, -0.5, 0.0, 0.0})), Error);
}

TEST(Tangle, SingleQubit) {
  EXPECT_NEAR(tangle(DensityMatrix()), 1.0, 1e-15);
  EXPECT_NEAR(tangle(DensityMatrix::pure(0.6, 0.8)), 0.0, 1e-15);
  EXPECT_NEAR(tangle(DensityMatrix::from_matrix(ComplexMatrix::diagonal({0.75, 0.25}))), 0.75,
              1e-15);
}

CollisionSpec controlled_z() {
  CollisionSpec spec;
  spec.v0 = ComplexMatrix::identity(2);
  spec.v1 = pauli::z();
  spec.xi = DensityMatrix::pure(1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0));
  return spec;
}

TEST(Network, ControlledZExamples) {
  const Complex s{1.0 / std::sqrt(2.0)};
  const EntanglementReport one = ckw_check(evolve_network(controlled_z(), s, s, 1, 1));
  EXPECT_NEAR(one.tau0, 1.0, 1e-12);
  const EntanglementReport none = ckw_check(evolve_network(controlled_z(), s, s, 4, 0));
  for (double t : none.tangles) EXPECT_NEAR(t, 0.0, 1e-12);
  for (double t : none.tau0k) EXPECT_NEAR(t, 0.0, 1e-12);
  EXPECT_NEAR(none.delta, 0.0, 1e-12);
  EXPECT_TRUE(env_state_check(controlled_z(), s, s, 4, 3));
  EXPECT_TRUE(env_state_check(controlled_z(), s, s, 4, 0));
}

TEST(Network, LargestRegisterAgrees) {
  Rng rng(415);
  const CollisionSpec spec = testing::random_spec(rng, true);
  const auto chi = testing::random_ket(rng, 2);
  const auto a = network_state_closed_form(spec, chi[0], chi[1], 8, 8);
  const auto b = evolve_network(spec, chi[0], chi[1], 8, 8);
  EXPECT_NEAR(b.norm(), 1.0, 1e-12);
  double diff = 0.0;
  for (std::size_t i = 0; i < a.amplitudes().size(); ++i)
    diff = std::max(diff, std::abs(a.amplitudes()[i] - b.amplitudes()[i]));
  EXPECT_LT(diff, 1e-10);
}

TEST(Network, OverlapEqualsChannelLambda) {
  Rng rng(417);
  for (int trial = 0; trial < 20; ++trial) {
    const CollisionSpec spec = testing::random_spec(rng, true);
    const ComplexMatrix psi = reservoir_ket(spec);
    const ComplexMatrix overlap = (spec.v0 * psi).adjoint() * (spec.v1 * psi);
    EXPECT_NEAR(std::abs(overlap(0, 0)), x_operator(spec).params().lambda(), 1e-12);
  }
}

TEST(Network, ClosedFormMatchesSequentialEvolution) {
  Rng rng(405);
  for (int trial = 0; trial < 10; ++trial) {
    const CollisionSpec spec = testing::random_spec(rng, true);
    const auto chi = testing::random_ket(rng, 2);
    const std::size_t big_n = 6;
    for (std::size_t n = 0; n <= big_n; ++n) {
      const auto a = network_state_closed_form(spec, chi[0], chi[1], big_n, n);
      const auto b = evolve_network(spec, chi[0], chi[1], big_n, n);
      double diff = 0.0;
      for (std::size_t i = 0; i < a.amplitudes().size(); ++i)
        diff = std::max(diff, std::abs(a.amplitudes()[i] - b.amplitudes()[i]));
      EXPECT_LT(diff, 1e-13) << "n=" << n;
    }
  }
}

TEST(Network, ReducedStatesMatchPartialTraces) {
  Rng rng(407);
  for (int trial = 0; trial < 10; ++trial) {
    const CollisionSpec spec = testing::random_spec(rng, true);
    const auto chi = testing::random_ket(rng, 2);
    const std::size_t n = 4;
    const auto psi = amplitudes(evolve_network(spec, chi[0], chi[1], n, n));
    for (std::size_t k = 1; k <= n; ++k) {
      const ReducedStates r = analytic_reduced_states(spec, chi[0], chi[1], n, k);
      EXPECT_LT(max_abs_diff(r.rho0, oracle::reduce(psi, n + 1, {0})), 1e-13);
      EXPECT_LT(max_abs_diff(r.rhok, oracle::reduce(psi, n + 1, {k})), 1e-13);
      EXPECT_LT(max_abs_diff(r.rho0k, oracle::reduce(psi, n + 1, {0, k})), 1e-13);
      ASSERT_TRUE(r.rhojk);
      const std::size_t j = k == 1 ? 2 : 1;
      EXPECT_LT(max_abs_diff(*r.rhojk, oracle::reduce(psi, n + 1, {std::min(j, k), std::max(j, k)})),
                1e-13);
    }
  }
  CollisionSpec spec;
  spec.xi = DensityMatrix::pure(1.0, 0.0);
  EXPECT_FALSE(analytic_reduced_states(spec, 1.0, 0.0, 1, 1).rhojk);
  EXPECT_THROW(analytic_reduced_states(spec, 1.0, 0.0, 2, 3), Error);
}

TEST(Network, ReducedStateModuliAndSeparablePairs) {
  Rng rng(419);
  const CollisionSpec spec = testing::random_spec(rng, true);
  const auto chi = testing::random_ket(rng, 2);
  const double overlap = std::abs(x_operator(spec).mean);
  const std::size_t big_n = 6, n = 4, k = 2;
  const auto psi = amplitudes(evolve_network(spec, chi[0], chi[1], big_n, n));
  const ReducedStates r = analytic_reduced_states(spec, chi[0], chi[1], n, k);
  EXPECT_LT(max_abs_diff(r.rho0k, oracle::reduce(psi, big_n + 1, {0, k})), 1e-10);
  const ComplexMatrix rho0 = DensityMatrix::from_matrix(r.rho0).in_basis(spec.basis);
  EXPECT_NEAR(std::abs(rho0(0, 1)), std::abs(chi[0] * std::conj(chi[1])) * std::pow(overlap, n),
              1e-13);
  ASSERT_TRUE(r.rhojk);
  EXPECT_NEAR(concurrence(*r.rhojk), 0.0, 1e-10);
}

TEST(AnalyticTangles, Monotonicity) {
  Rng rng(421);
  for (int trial = 0; trial < 20; ++trial) {
    const double overlap = testing::uniform(rng, 0.0, 0.999);
    const auto chi = testing::random_ket(rng, 2);
    double prev_tau0 = -1.0;
    double prev_tau0k = 2.0;
    for (std::size_t n = 1; n <= 40; ++n) {
      const EntanglementReport r = analytic_tangles(overlap, chi[0], chi[1], n);
      EXPECT_GE(r.tau0, prev_tau0);
      EXPECT_LE(r.tau0k.front(), prev_tau0k);
      prev_tau0 = r.tau0;
      prev_tau0k = r.tau0k.front();
      for (double t : r.tangles) {
        EXPECT_GE(t, 0.0);
        EXPECT_LE(t, 1.0);
      }
    }
  }
}

TEST(Network, RequiresPureReservoir) {
  CollisionSpec spec;  // xi = I/2
  try {
    evolve_network(spec, 1.0, 0.0, 2, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMixedState);
  }
  spec.xi = DensityMatrix::pure(1.0, 0.0);
  EXPECT_THROW(evolve_network(spec, 1.0, 0.0, 20, 1), Error);
  EXPECT_THROW(evolve_network(spec, 1.0, 0.0, 2, 3), Error);
  EXPECT_THROW(evolve_network(spec, 1.0, 1.0, 2, 1), Error);
}

TEST(AnalyticTangles, EqualWeightsOverlapThreeQuarters) {
  const double s = std::sqrt(0.5);
  for (std::size_t n = 1; n <= 30; ++n) {
    const EntanglementReport r = analytic_tangles(std::sqrt(0.75), s, s, n);
    EXPECT_NEAR(r.tau0, 1.0 - std::pow(0.75, n), 1e-14);
    EXPECT_NEAR(r.tauk, 0.25, 1e-14);
    EXPECT_NEAR(r.tau0k.front(), 0.25 * std::pow(0.75, n - 1.0), 1e-14);
    EXPECT_EQ(r.tau0k.size(), n);
    EXPECT_GE(r.delta, 0.0);
  }
  const EntanglementReport first = analytic_tangles(std::sqrt(0.75), s, s, 1);
  EXPECT_NEAR(first.tau0, 0.25, 1e-15);
  EXPECT_NEAR(first.tau0k[0], 0.25, 1e-15);
  EXPECT_NEAR(first.delta, 0.0, 1e-15);
  const EntanglementReport second = analytic_tangles(std::sqrt(0.75), s, s, 2);
  EXPECT_NEAR(second.tau0, 0.4375, 1e-15);
  EXPECT_NEAR(second.sum_tau0k(), 0.375, 1e-15);
  const EntanglementReport late = analytic_tangles(std::sqrt(0.75), s, s, 200);
  EXPECT_NEAR(late.tau0, 1.0, 1e-15);
  EXPECT_LT(late.tau0k.front(), 1e-20);
  EXPECT_THROW(analytic_tangles(1.5, s, s, 1), Error);
  EXPECT_THROW(analytic_tangles(0.5, s, s, 0), Error);
}

TEST(AnalyticTangles, MatchStatevector) {
  Rng rng(409);
  for (int trial = 0; trial < 5; ++trial) {
    const CollisionSpec spec = testing::random_spec(rng, true);
    const auto chi = testing::random_ket(rng, 2);
    const double overlap = std::abs(x_operator(spec).mean);
    const std::size_t big_n = 6;
    for (std::size_t n = 1; n <= big_n; ++n) {
      const EntanglementReport exact = analytic_tangles(overlap, chi[0], chi[1], n);
      const EntanglementReport sim = ckw_check(evolve_network(spec, chi[0], chi[1], big_n, n));
      EXPECT_NEAR(sim.tau0, exact.tau0, 1e-10);
      EXPECT_NEAR(sim.tangles[1], exact.tauk, 1e-10);
      for (std::size_t k = 0; k < n; ++k) EXPECT_NEAR(sim.tau0k[k], exact.tau0k[k], 1e-10);
      for (std::size_t k = n; k < big_n; ++k) EXPECT_NEAR(sim.tau0k[k], 0.0, 1e-10);
      EXPECT_NEAR(sim.taujk, 0.0, 1e-10);
      for (std::size_t j = 0; j <= n; ++j)
        EXPECT_NEAR(sim.delta_j[j], exact.delta_j[j], 1e-9);
    }
  }
}

TEST(Ckw, MonogamyHoldsOnRandomStates) {
  Rng rng(411);
  for (std::size_t q : {3u, 4u, 5u}) {
    for (int trial = 0; trial < 5; ++trial) {
      const EntanglementReport r = ckw_check(PureMultiQubitState(testing::random_ket(rng, 1u << q)));
      for (double d : r.delta_j_raw) EXPECT_GE(d, -1e-8);
    }
  }
}

TEST(Ckw, WStateSaturates) {
  for (std::size_t n : {3u, 4u, 6u}) {
    const EntanglementReport r = ckw_check(w_state(n));
    for (double d : r.delta_j_raw) EXPECT_LT(std::abs(d), 1e-8) << n;
    EXPECT_NEAR(r.tau0, 4.0 * (n - 1.0) / (n * n), 1e-12);
  }
}

TEST(Ckw, GhzIsPurelyMultipartite) {
  const EntanglementReport r = ckw_check(ghz_state(5));
  for (double t : r.tangles) EXPECT_NEAR(t, 1.0, 1e-12);
  EXPECT_NEAR(r.taujk, 0.0, 1e-12);
  for (double t : r.tau0k) EXPECT_NEAR(t, 0.0, 1e-12);
  EXPECT_NEAR(r.delta, 1.0, 1e-12);
}

TEST(Ckw, RegisterCap) {
  std::vector<Complex> psi(std::size_t{1} << 13);
  psi[0] = 1.0;
  try {
    ckw_check(PureMultiQubitState(psi));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kRegisterTooLarge);
  }
}

TEST(Environment, ProductMixture) {
  Rng rng(413);
  for (int trial = 0; trial < 3; ++trial) {
    const CollisionSpec spec = testing::random_spec(rng, true);
    const auto chi = testing::random_ket(rng, 2);
    EXPECT_TRUE(env_state_check(spec, chi[0], chi[1], 5, 3));
    const ComplexMatrix env = analytic_environment_state(spec, chi[0], chi[1], 5, 3);
    EXPECT_NEAR(env.trace().real(), 1.0, 1e-12);
    const auto psi = amplitudes(evolve_network(spec, chi[0], chi[1], 5, 3));
    EXPECT_LT(max_abs_diff(env, oracle::reduce(psi, 6, {1, 2, 3, 4, 5})), 1e-12);
  }
}

}  // namespace
}  // namespace qdecoh
