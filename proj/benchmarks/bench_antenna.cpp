// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 hocsim contributors

#include <benchmark/benchmark.h>

#include <random>

#include "hocsim/antenna.hpp"

namespace {

void BM_ElementGain(benchmark::State& state) {
  const hocsim::ElementPattern pattern{};
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> th(0.0, 180.0);
  std::uniform_real_distribution<double> ph(-180.0, 180.0);
  for (auto _ : state)
    benchmark::DoNotOptimize(hocsim::element_gain_db(th(rng), ph(rng), pattern));
}
BENCHMARK(BM_ElementGain);

void BM_ArrayFactor(benchmark::State& state) {
  const hocsim::ArrayConfig cfg{};
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> th(0.0, 180.0);
  for (auto _ : state) benchmark::DoNotOptimize(hocsim::array_factor_db(th(rng), 0.0, cfg));
}
BENCHMARK(BM_ArrayFactor);

void BM_SteeredArrayFactorBulk(benchmark::State& state) {
  const hocsim::ArrayConfig cfg{};
  const hocsim::SteeredArrayFactor af(cfg);
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (auto _ : state) {
    const double c = u(rng);
    benchmark::DoNotOptimize(af.eval_db(c, std::sqrt(1.0 - c * c), 0.0));
  }
}
BENCHMARK(BM_SteeredArrayFactorBulk);

}  // namespace
