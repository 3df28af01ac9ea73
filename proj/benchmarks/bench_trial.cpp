// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 hocsim contributors

#include <benchmark/benchmark.h>

#include "hocsim/campaign.hpp"

namespace {

hocsim::ScenarioConfig scenario(double v_kmh, double lambda) {
  hocsim::ScenarioConfig cfg;
  cfg.v_kmh = v_kmh;
  cfg.lambda_gbs_per_km2 = lambda;
  cfg.t_window_s = 100.0;
  cfg.master_seed = 99;
  cfg.n_trials = 1;
  return cfg;
}

void BM_TrialSparse(benchmark::State& state) {
  const auto cfg = scenario(30.0, 2.0);
  int trial = 0;
  for (auto _ : state) benchmark::DoNotOptimize(hocsim::run_trial(cfg, trial++));
}
BENCHMARK(BM_TrialSparse)->Unit(benchmark::kMillisecond);

void BM_TrialDense(benchmark::State& state) {
  const auto cfg = scenario(160.0, 10.0);
  int trial = 0;
  for (auto _ : state) benchmark::DoNotOptimize(hocsim::run_trial(cfg, trial++));
}
BENCHMARK(BM_TrialDense)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
