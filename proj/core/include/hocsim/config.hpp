// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 hocsim contributors

#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hocsim/campaign.hpp"

namespace hocsim {

/// Parse failure with a line-anchored "file:line: message" description.
struct ConfigError : std::runtime_error {
  ConfigError(std::string_view file, int line, const std::string& message);
  int line = 0;
};

/// A campaign description: shared parameters plus the (v, lambda_gbs, T)
/// grid axes. Scenarios are the cross product of the axes.
struct SimulationPlan {
  std::vector<double> v_kmh{30.0};
  std::vector<double> lambda_gbs_per_km2{6.0};
  std::vector<double> t_window_s{100.0};
  ScenarioConfig base;
  int workers = 0;  // 0 = hardware concurrency

  std::vector<ScenarioConfig> scenarios() const;
};

/// Read a key = value config with [section] headers. Unknown sections or
/// keys, malformed numbers and out-of-place lines raise ConfigError.
SimulationPlan parse_config(std::istream& input, std::string_view filename);
SimulationPlan parse_config_file(const std::string& path);

/// Normalized snapshot of a plan; parsing it back reproduces the plan
/// exactly (doubles are printed with round-trip precision).
std::string serialize_config(const SimulationPlan& plan);

/// Stable per-scenario file stem, e.g. "v30_l6_T100".
std::string scenario_file_tag(const ScenarioConfig& config);

}  // namespace hocsim
