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

#include <benchmark/benchmark.h>

#include <cmath>
#include <random>

#include "qdecoh/qdecoh.hpp"

namespace {

using namespace qdecoh;

ComplexMatrix random_hermitian(std::size_t dim, std::mt19937_64& rng) {
  std::normal_distribution<double> n;
  ComplexMatrix g(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) g(i, j) = Complex{n(rng), n(rng)};
  return (g + g.adjoint()) * Complex{0.5};
}

void BM_HermEig(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const ComplexMatrix h = random_hermitian(static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(herm_eig(h));
}
BENCHMARK(BM_HermEig)->RangeMultiplier(2)->Range(2, 64);

void BM_Concurrence(benchmark::State& state) {
  std::mt19937_64 rng(2);
  ComplexMatrix g = random_hermitian(4, rng);
  ComplexMatrix rho = g * g;
  rho *= Complex{1.0 / rho.trace().real()};
  for (auto _ : state) benchmark::DoNotOptimize(concurrence(rho));
}
BENCHMARK(BM_Concurrence);

void BM_ClassifyDecoherence(benchmark::State& state) {
  const TransferMatrix e = to_computational_frame(
      make_decoherence_channel(DecoherenceParams(0.4, 1.2)),
      DecoherenceBasis::from_axis({0.3, -0.5, 0.8}));
  for (auto _ : state) benchmark::DoNotOptimize(classify_decoherence(e));
}
BENCHMARK(BM_ClassifyDecoherence);

void BM_EvolveNetwork(benchmark::State& state) {
  const CollisionSpec spec = design_collision(DecoherenceParams(std::sqrt(0.75), 0.4));
  const auto n = static_cast<std::size_t>(state.range(0));
  const Complex s{std::sqrt(0.5)};
  for (auto _ : state) benchmark::DoNotOptimize(evolve_network(spec, s, s, n, n));
}
BENCHMARK(BM_EvolveNetwork)->DenseRange(4, 16, 4);

void BM_CkwCheck(benchmark::State& state) {
  const CollisionSpec spec = design_collision(DecoherenceParams(std::sqrt(0.75), 0.4));
  const auto n = static_cast<std::size_t>(state.range(0));
  const Complex s{std::sqrt(0.5)};
  const PureMultiQubitState psi = evolve_network(spec, s, s, n, n);
  for (auto _ : state) benchmark::DoNotOptimize(ckw_check(psi));
}
BENCHMARK(BM_CkwCheck)->DenseRange(3, 11, 2);

void BM_Rk4Trajectory(benchmark::State& state) {
  const Generator g = generator_from_params(DecoherenceParams(0.5, 0.3));
  const DensityMatrix rho = DensityMatrix::pure(std::sqrt(0.5), std::sqrt(0.5));
  std::vector<double> grid;
  for (int i = 0; i <= 100; ++i) grid.push_back(0.1 * i);
  for (auto _ : state) benchmark::DoNotOptimize(evolve_rk4(g, rho, grid));
}
BENCHMARK(BM_Rk4Trajectory);

}  // namespace

BENCHMARK_MAIN();
