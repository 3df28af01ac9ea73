// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 hocsim contributors

#include <benchmark/benchmark.h>

#include <random>

#include "hocsim/channel.hpp"
#include "hocsim/rng.hpp"

namespace {

void BM_PathLoss(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> d(10.0, 3000.0);
  for (auto _ : state) benchmark::DoNotOptimize(hocsim::path_loss_db(d(rng), 120.0, 1.5));
}
BENCHMARK(BM_PathLoss);

void BM_ShadowingAdvance(benchmark::State& state) {
  hocsim::ShadowingProcess process(2.4, 0.9967, hocsim::make_engine(7));
  for (auto _ : state) benchmark::DoNotOptimize(process.advance());
}
BENCHMARK(BM_ShadowingAdvance);

void BM_SfSequence500(benchmark::State& state) {
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        hocsim::correlated_sf_sequence(500, 1.667, 2.4, 0.82, 100.0, hocsim::make_engine(++seed)));
  }
}
BENCHMARK(BM_SfSequence500);

}  // namespace
