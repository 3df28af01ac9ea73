// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 hocsim contributors

#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "hocsim/antenna.hpp"
#include "hocsim/channel.hpp"
#include "hocsim/geometry.hpp"
#include "hocsim/handover.hpp"

namespace hocsim {

/// Full parameter set of one Monte Carlo scenario.
struct ScenarioConfig {
  double v_kmh = 30.0;
  double lambda_gbs_per_km2 = 6.0;
  double t_window_s = 100.0;
  double gap_s = 0.2;
  double h_uav_m = 120.0;
  double h_gbs_m = 35.0;

  ElementPattern element;
  ArrayConfig array;
  ChannelParams channel;
  A3Config a3;

  int n_trials = 1000;
  std::uint64_t master_seed = 1;
  double guard_margin_m = 3000.0;
  double prune_radius_m = 3000.0;

  void validate() const;  // throws std::invalid_argument

  /// Distance covered during the window, in km (v in km/h, T in hours).
  double distance_km() const { return v_kmh * (t_window_s / 3600.0); }
};

struct HocSample {
  std::int32_t trial = 0;
  std::uint64_t seed = 0;
  std::int32_t hoc = 0;
};

struct HocDataset {
  ScenarioConfig config;
  std::vector<HocSample> samples;

  std::vector<int> hoc_values() const;
};

/// Run one trial: fresh PPP layout, fresh per-cell shadowing, RSRP series
/// over the trajectory, A3 state machine. Deterministic function of
/// (config, trial_index); the optional event log records executed handovers.
HocSample run_trial(const ScenarioConfig& config, int trial_index,
                    std::vector<HandoverEvent>* event_log = nullptr);

/// All trials of one scenario; workers <= 0 uses the hardware concurrency.
/// Output is identical for every worker count. When `event_logs` is given it
/// is resized to n_trials and filled with each trial's handover timeline.
HocDataset run_dataset(const ScenarioConfig& config, int workers = 0,
                       std::vector<std::vector<HandoverEvent>>* event_logs = nullptr);

/// One dataset per scenario, in grid order.
std::vector<HocDataset> run_campaign(
    std::span<const ScenarioConfig> grid, int workers = 0,
    const std::function<void(const HocDataset&)>& on_scenario_done = nullptr);

/// Dataset CSV ("trial,seed,hoc", LF line endings).
void write_dataset_csv(std::ostream& os, const HocDataset& dataset);
std::string dataset_csv(const HocDataset& dataset);

}  // namespace hocsim
