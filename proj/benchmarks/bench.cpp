// Copyright 2026 The Pauliphoton Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include <random>

#include "pauliphoton/entanglement.hpp"
#include "pauliphoton/fock_oracle.hpp"
#include "pauliphoton/overlaps.hpp"
#include "pauliphoton/sweep.hpp"
#include "pauliphoton/wick.hpp"

using namespace pauliphoton;

static void BM_Concurrence(benchmark::State& state) {
  std::mt19937 rng(1);
  std::uniform_real_distribution<double> ratio(0.0, 1.0);
  const OverlapQuad q{1.0, ratio(rng), 1.0, ratio(rng)};
  const TwoQubitDM dm = normalize(assemble_density_matrix(q));
  for (auto _ : state) {
    benchmark::DoNotOptimize(concurrence(dm));
  }
}
BENCHMARK(BM_Concurrence);

static void BM_AnalyzeQuad(benchmark::State& state) {
  const OverlapQuad q = lorentzian_quad(2.0, 2.0, 2.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(analyze(q));
  }
}
BENCHMARK(BM_AnalyzeQuad);

static void BM_CrossOverlapQuadrature(benchmark::State& state) {
  const MomentumProfile p1 = lorentzian_profile(2.0, -1.0);
  const MomentumProfile p2 = lorentzian_profile(2.0, 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cross_overlap_quadrature(p1, p2));
  }
}
BENCHMARK(BM_CrossOverlapQuadrature);

static void BM_VacuumExpectation8(benchmark::State& state) {
  std::vector<OpSymbol> ops;
  for (int i = 0; i < 4; ++i) ops.push_back(annihilate_op(Species::electron, i % 2, i / 2));
  for (int i = 0; i < 4; ++i) ops.push_back(create_op(Species::electron, i % 2, i / 2));
  const ContractionKernel kernel = kronecker_kernel();
  for (auto _ : state) {
    benchmark::DoNotOptimize(vacuum_expectation(ops, kernel));
  }
}
BENCHMARK(BM_VacuumExpectation8);

static void BM_OracleDensityMatrix(benchmark::State& state) {
  const auto setup = lorentzian_oracle_setup(2.0, 2.0, 2.0,
                                             static_cast<int>(state.range(0)), 40.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle_density_matrix(setup));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_OracleDensityMatrix)->Arg(101)->Arg(201)->Arg(401)->Complexity();

static void BM_SweepRow(benchmark::State& state) {
  SweepSpec spec;
  spec.widths = {2.0};
  spec.d_range = {0.0, 10.0, 11};
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_sweep(spec));
  }
}
BENCHMARK(BM_SweepRow);

BENCHMARK_MAIN();
