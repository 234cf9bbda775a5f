// Copyright 2026 The ptlattice Authors
// SPDX-License-Identifier: Apache-2.0

// Parallel sweep kernels against their serial references.

#include <benchmark/benchmark.h>

#include "ptlat/models.hpp"
#include "ptlat/sweep.hpp"

namespace {

using ptlat::ModelName;

void BM_SweepSpectra(benchmark::State& state, ModelName model, bool parallel) {
  const ptlat::ModelFamily fam = ptlat::registry_family(model);
  const ptlat::ParameterRange r = fam.default_range();
  const auto grid = ptlat::linear_grid(r.lo, r.hi, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto spectra = parallel ? ptlat::sweep_spectra(fam, grid) : ptlat::sweep_spectra_serial(fam, grid);
    benchmark::DoNotOptimize(spectra);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_RealCounts(benchmark::State& state, bool parallel) {
  const ptlat::ModelFamily fam = ptlat::registry_family(ModelName::Mdg6W2);
  const auto grid = ptlat::linear_grid(-0.5, 0.5, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto counts = parallel ? ptlat::sweep_real_counts(fam, grid) : ptlat::sweep_real_counts_serial(fam, grid);
    benchmark::DoNotOptimize(counts);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK_CAPTURE(BM_SweepSpectra, ec4_parallel, ModelName::Ec4, true)->Arg(401)->Arg(4001);
BENCHMARK_CAPTURE(BM_SweepSpectra, ec4_serial, ModelName::Ec4, false)->Arg(401)->Arg(4001);
BENCHMARK_CAPTURE(BM_SweepSpectra, mdg6_w2_parallel, ModelName::Mdg6W2, true)->Arg(401)->Arg(4001);
BENCHMARK_CAPTURE(BM_SweepSpectra, mdg6_w2_serial, ModelName::Mdg6W2, false)->Arg(401)->Arg(4001);
BENCHMARK_CAPTURE(BM_RealCounts, parallel, true)->Arg(2001);
BENCHMARK_CAPTURE(BM_RealCounts, serial, false)->Arg(2001);

BENCHMARK_MAIN();
