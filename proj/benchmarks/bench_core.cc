// Copyright 2026 The ampvi Authors.
// SPDX-License-Identifier: Apache-2.0

#include <random>

#include <benchmark/benchmark.h>

#include "ampvi/evaluation.h"
#include "ampvi/geometry.h"
#include "ampvi/problems.h"
#include "ampvi/schedules.h"
#include "ampvi/solvers.h"
#include "ampvi/stochastic_oracle.h"

namespace ampvi {
namespace {

Vector RandomVector(int n, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  Vector v(n);
  for (int i = 0; i < n; ++i) v(i) = normal(rng);
  return v;
}

void BM_ProxEuclideanBox(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const FeasibleSet set = FeasibleSet::Box(n, -1.0, 1.0);
  const Vector z = Vector::Zero(n);
  const Vector eta = RandomVector(n, 1);
  const SimpleTerm j = SimpleTerm::L1(0.1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ProxMap(GeometrySetup::Euclidean(), set, z, eta, j, 0.5));
  }
}
BENCHMARK(BM_ProxEuclideanBox)->Arg(16)->Arg(256)->Arg(4096);

void BM_ProxEntropySimplex(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const FeasibleSet set = FeasibleSet::Simplex(n);
  const Vector z = Vector::Constant(n, 1.0 / n);
  const Vector eta = RandomVector(n, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        ProxMap(GeometrySetup::Entropy(), set, z, eta, SimpleTerm::Zero(), 0.5));
  }
}
BENCHMARK(BM_ProxEntropySimplex)->Arg(16)->Arg(256)->Arg(4096);

void BM_ProxEuclideanSimplex(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const FeasibleSet set = FeasibleSet::Simplex(n);
  const Vector z = Vector::Constant(n, 1.0 / n);
  const Vector eta = RandomVector(n, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        ProxMap(GeometrySetup::Euclidean(), set, z, eta, SimpleTerm::Zero(), 0.5));
  }
}
BENCHMARK(BM_ProxEuclideanSimplex)->Arg(16)->Arg(256)->Arg(4096);

void BM_AmpStepDet(benchmark::State& state) {
  InstanceConstants c;
  c.geometry = GeometrySetup::Entropy();
  const int n = static_cast<int>(state.range(0));
  const ProblemSpec p = MakeInstance(ProblemKind::kBilinearSaddle, n, c, 1);
  ScheduleConstants k;
  k.lipschitz_g = p.lipschitz_g;
  k.lipschitz_h = p.lipschitz_h;
  k.omega = std::sqrt(OmegaSquared(c.geometry, p.set));
  const Schedule s = Schedule::Make(Regime::kDetBounded, k);
  IterateState st = InitialState(p.set.Center());
  int t = 1;
  for (auto _ : state) {
    st = AmpStepDet(st, p, c.geometry, s.alpha(t), s.gamma(t), nullptr);
    ++t;
  }
}
BENCHMARK(BM_AmpStepDet)->Arg(10)->Arg(100)->Arg(500);

void BM_AmpStepStoch(benchmark::State& state) {
  InstanceConstants c;
  c.domain = BilinearDomain::kBall;
  c.matrix = BilinearMatrix::kLogSpectrum;
  const int n = static_cast<int>(state.range(0));
  const ProblemSpec p = MakeInstance(ProblemKind::kBilinearSaddle, n, c, 1);
  ScheduleConstants k;
  k.lipschitz_h = p.lipschitz_h;
  k.sigma_g = 0.5;
  k.sigma_h = 0.5;
  k.omega = std::sqrt(OmegaSquared(c.geometry, p.set));
  const Schedule s = Schedule::Make(Regime::kStochBounded, k);
  StochasticOracle oracle(p, NoiseKind::kGaussian, 0.5, 0.5, 7);
  IterateState st = InitialState(p.set.Center(), true);
  NoiseLogEntry noise;
  int t = 1;
  for (auto _ : state) {
    st = AmpStepStoch(st, oracle, c.geometry, s.alpha(t), s.gamma(t), &noise, nullptr);
    ++t;
  }
}
BENCHMARK(BM_AmpStepStoch)->Arg(10)->Arg(100)->Arg(500);

void BM_GapBilinear(benchmark::State& state) {
  InstanceConstants c;
  c.geometry = GeometrySetup::Entropy();
  const int n = static_cast<int>(state.range(0));
  const ProblemSpec p = MakeInstance(ProblemKind::kBilinearSaddle, n, c, 1);
  const Vector u = p.set.Center();
  for (auto _ : state) benchmark::DoNotOptimize(GapBounded(p, u));
}
BENCHMARK(BM_GapBilinear)->Arg(10)->Arg(100)->Arg(500);

}  // namespace
}  // namespace ampvi

BENCHMARK_MAIN();
