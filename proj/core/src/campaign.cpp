// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 hocsim contributors

#include "hocsim/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <numbers>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "hocsim/rng.hpp"

namespace hocsim {

void ScenarioConfig::validate() const {
  if (v_kmh < 0.0) throw std::invalid_argument("ScenarioConfig: velocity must be >= 0");
  if (lambda_gbs_per_km2 <= 0.0)
    throw std::invalid_argument("ScenarioConfig: GBS density must be positive");
  if (t_window_s <= 0.0) throw std::invalid_argument("ScenarioConfig: window must be positive");
  if (gap_s <= 0.0) throw std::invalid_argument("ScenarioConfig: gap must be positive");
  // LoS probability is 1 only from 40 m up; lower UAV heights are out of scope.
  if (h_uav_m < 40.0 || h_uav_m > 300.0)
    throw std::invalid_argument("ScenarioConfig: UAV height must be in [40, 300] m");
  if (h_gbs_m <= 0.0) throw std::invalid_argument("ScenarioConfig: GBS height must be positive");
  if (n_trials < 1) throw std::invalid_argument("ScenarioConfig: need at least one trial");
  if (guard_margin_m < 0.0)
    throw std::invalid_argument("ScenarioConfig: guard margin must be >= 0");
  if (prune_radius_m <= 0.0)
    throw std::invalid_argument("ScenarioConfig: prune radius must be positive");
  element.validate();
  array.validate();
  channel.validate();
  a3.validate();
  if (a3.gap_s != gap_s)
    throw std::invalid_argument("ScenarioConfig: A3 gap and measurement gap disagree");
}

std::vector<int> HocDataset::hoc_values() const {
  std::vector<int> values;
  values.reserve(samples.size());
  for (const auto& s : samples) values.push_back(s.hoc);
  return values;
}

namespace {

constexpr double kDegPerRad = 180.0 / std::numbers::pi;

// Lazily materialized shadow-fading state of one cell. The process is
// created at the cell's first measurement and fast-forwarded across
// waypoints where the cell was outside the candidate radius.
struct SfCell {
  std::int32_t last_index = -1;
  std::optional<ShadowingProcess> process;
};

}  // namespace

HocSample run_trial(const ScenarioConfig& config, int trial_index,
                    std::vector<HandoverEvent>* event_log) {
  config.validate();
  if (trial_index < 0) throw std::invalid_argument("run_trial: trial index must be >= 0");

  const Trajectory trajectory{Vec2{0.0, 0.0}, 0.0,       config.v_kmh,
                              config.h_uav_m, config.gap_s, config.t_window_s};
  const auto wps = waypoints(trajectory);

  SimulationRegion region;
  region.x_min = region.x_max = wps.front().x;
  region.y_min = region.y_max = wps.front().y;
  for (const auto& wp : wps) {
    region.x_min = std::min(region.x_min, wp.x);
    region.x_max = std::max(region.x_max, wp.x);
    region.y_min = std::min(region.y_min, wp.y);
    region.y_max = std::max(region.y_max, wp.y);
  }
  region.x_min -= config.guard_margin_m;
  region.x_max += config.guard_margin_m;
  region.y_min -= config.guard_margin_m;
  region.y_max += config.guard_margin_m;

  auto ppp_engine = make_engine(
      derive_seed(config.master_seed, static_cast<std::uint64_t>(Stream::ppp), trial_index));
  const auto sites = sample_ppp(config.lambda_gbs_per_km2, region, config.h_gbs_m, ppp_engine);

  // Sites sorted by x for a sliding candidate window along the flight.
  std::vector<std::int32_t> order(sites.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::int32_t a, std::int32_t b) {
    const auto& pa = sites[static_cast<std::size_t>(a)].position;
    const auto& pb = sites[static_cast<std::size_t>(b)].position;
    return pa.x != pb.x ? pa.x < pb.x : a < b;
  });

  const double dz = config.h_uav_m - config.h_gbs_m;
  const double sigma = sigma_sf_db(config.h_uav_m);
  const double step_m = config.v_kmh * kKmhToMps * config.gap_s;
  const double rho_step = sf_step_correlation(step_m, config.channel.beta, config.channel.x_c_m);
  const double pl_coeff = std::max(23.9 - 1.8 * std::log10(config.h_uav_m), 20.0);
  const double pl_const = 20.0 * std::log10(40.0 * std::numbers::pi * config.channel.fc_ghz / 3.0);
  const double radius = config.prune_radius_m;
  const double radius_sq = radius * radius;
  const SteeredArrayFactor array_factor(config.array);

  std::vector<SfCell> sf(3 * sites.size());
  std::vector<Measurement> meas;
  meas.reserve(64);

  std::optional<HandoverState> state;
  std::size_t lo = 0;
  std::size_t hi = 0;
  for (const auto& wp : wps) {
    while (lo < order.size() &&
           sites[static_cast<std::size_t>(order[lo])].position.x < wp.x - radius)
      ++lo;
    while (hi < order.size() &&
           sites[static_cast<std::size_t>(order[hi])].position.x <= wp.x + radius)
      ++hi;

    meas.clear();
    for (std::size_t oi = lo; oi < hi; ++oi) {
      const auto& site = sites[static_cast<std::size_t>(order[oi])];
      const double dx = wp.x - site.position.x;
      const double dy = wp.y - site.position.y;
      const double d2_sq = dx * dx + dy * dy;
      if (d2_sq > radius_sq) continue;

      const double d2d = std::sqrt(d2_sq);
      const double d3d = std::sqrt(d2_sq + dz * dz);
      const double inv_d3d = 1.0 / d3d;
      const double cos_theta = dz * inv_d3d;
      const double sin_theta = d2d * inv_d3d;
      const double zenith_deg = std::atan2(d2d, dz) * kDegPerRad;
      const double azimuth_global_deg = std::atan2(dy, dx) * kDegPerRad;
      const double pl = pl_coeff * std::log10(d3d) + pl_const;
      const double af_common =
          array_factor.azimuth_invariant() ? array_factor.eval_db(cos_theta, sin_theta, 0.0) : 0.0;

      for (int sec = 0; sec < 3; ++sec) {
        const double azimuth_deg =
            wrap_deg(azimuth_global_deg - site.boresight_deg[static_cast<std::size_t>(sec)]);
        double gain = element_gain_db(zenith_deg, azimuth_deg, config.element);
        gain += array_factor.azimuth_invariant()
                    ? af_common
                    : array_factor.eval_db(cos_theta, sin_theta,
                                           std::sin(azimuth_deg / kDegPerRad));

        auto& cell = sf[3 * static_cast<std::size_t>(site.site_id) + static_cast<std::size_t>(sec)];
        if (!cell.process) {
          cell.process.emplace(
              sigma, rho_step,
              make_engine(derive_seed(config.master_seed,
                                      static_cast<std::uint64_t>(Stream::shadowing), trial_index,
                                      site.site_id, sec)));
          cell.last_index = wp.index;
        } else if (wp.index > cell.last_index) {
          cell.process->advance(wp.index - cell.last_index);
          cell.last_index = wp.index;
        }

        meas.push_back(Measurement{
            CellId{site.site_id, static_cast<std::int8_t>(sec)},
            rsrp_dbm(config.channel.p_gbs_dbm, gain, pl, cell.process->current_db())});
      }
    }

    if (!state) {
      if (!meas.empty()) state.emplace(strongest_cell(meas));
      continue;
    }
    auto event = state->step(wp.time_s, meas, config.a3);
    if (event && event_log) event_log->push_back(*event);
  }

  HocSample sample;
  sample.trial = trial_index;
  sample.seed =
      derive_seed(config.master_seed, static_cast<std::uint64_t>(Stream::trial), trial_index);
  sample.hoc = state ? state->hoc() : 0;
  return sample;
}

HocDataset run_dataset(const ScenarioConfig& config, int workers,
                       std::vector<std::vector<HandoverEvent>>* event_logs) {
  config.validate();
  const int n = config.n_trials;
  int w = workers > 0 ? workers : static_cast<int>(std::thread::hardware_concurrency());
  w = std::clamp(w, 1, n);

  HocDataset dataset;
  dataset.config = config;
  dataset.samples.resize(static_cast<std::size_t>(n));
  if (event_logs) {
    event_logs->clear();
    event_logs->resize(static_cast<std::size_t>(n));
  }
  auto log_for = [&](int i) {
    return event_logs ? &(*event_logs)[static_cast<std::size_t>(i)] : nullptr;
  };

  if (w == 1) {
    for (int i = 0; i < n; ++i)
      dataset.samples[static_cast<std::size_t>(i)] = run_trial(config, i, log_for(i));
    return dataset;
  }

  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      const int i = next.fetch_add(1);
      if (i >= n) return;
      try {
        dataset.samples[static_cast<std::size_t>(i)] = run_trial(config, i, log_for(i));
      } catch (...) {
        std::scoped_lock lock(error_mutex);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };

  {
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<std::size_t>(w));
    for (int i = 0; i < w; ++i) pool.emplace_back(worker);
  }
  if (error) std::rethrow_exception(error);
  return dataset;
}

std::vector<HocDataset> run_campaign(std::span<const ScenarioConfig> grid, int workers,
                                     const std::function<void(const HocDataset&)>& on_scenario_done) {
  if (grid.empty()) throw std::invalid_argument("run_campaign: empty scenario grid");
  std::vector<HocDataset> datasets;
  datasets.reserve(grid.size());
  for (const auto& scenario : grid) {
    datasets.push_back(run_dataset(scenario, workers));
    if (on_scenario_done) on_scenario_done(datasets.back());
  }
  return datasets;
}

void write_dataset_csv(std::ostream& os, const HocDataset& dataset) {
  os << "trial,seed,hoc\n";
  for (const auto& s : dataset.samples) os << s.trial << ',' << s.seed << ',' << s.hoc << '\n';
}

std::string dataset_csv(const HocDataset& dataset) {
  std::ostringstream os;
  write_dataset_csv(os, dataset);
  return os.str();
}

}  // namespace hocsim
