// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 hocsim contributors

#include "hocsim/channel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

namespace hocsim {

namespace {

void check_uav_height(double h_uav_m) {
  if (h_uav_m < 10.0 || h_uav_m > 300.0)
    throw std::invalid_argument("UAV height must be in [10, 300] m, got " +
                                std::to_string(h_uav_m));
}

}  // namespace

void ChannelParams::validate() const {
  if (fc_ghz <= 0.0) throw std::invalid_argument("ChannelParams: fc must be positive");
  if (beta <= 0.0 || beta >= 1.0)
    throw std::invalid_argument("ChannelParams: beta must be in (0, 1)");
  if (x_c_m <= 0.0)
    throw std::invalid_argument("ChannelParams: decorrelation distance must be positive");
}

double sigma_sf_db(double h_uav_m) {
  check_uav_height(h_uav_m);
  return 4.2 * std::exp(-0.0046 * h_uav_m);
}

double path_loss_db(double d3d_m, double h_uav_m, double fc_ghz) {
  if (d3d_m <= 0.0) throw std::invalid_argument("path_loss: distance must be positive");
  check_uav_height(h_uav_m);
  if (fc_ghz <= 0.0) throw std::invalid_argument("path_loss: fc must be positive");
  const double coeff = std::max(23.9 - 1.8 * std::log10(h_uav_m), 20.0);
  return coeff * std::log10(d3d_m) +
         20.0 * std::log10(40.0 * std::numbers::pi * fc_ghz / 3.0);
}

double sf_step_correlation(double delta_m, double beta, double x_c_m) {
  if (delta_m < 0.0) throw std::invalid_argument("sf_step_correlation: delta must be >= 0");
  return std::pow(beta, delta_m / x_c_m);
}

ShadowingProcess::ShadowingProcess(double sigma_db, double rho_step, std::mt19937_64 engine)
    : sigma_(sigma_db), rho_(rho_step), engine_(std::move(engine)) {
  if (sigma_db < 0.0) throw std::invalid_argument("ShadowingProcess: sigma must be >= 0");
  if (rho_step < 0.0 || rho_step > 1.0)
    throw std::invalid_argument("ShadowingProcess: rho_step must be in [0, 1]");
  value_ = sigma_ * normal_(engine_);
}

double ShadowingProcess::advance(int steps) {
  if (steps < 0) throw std::invalid_argument("ShadowingProcess: steps must be >= 0");
  if (steps == 0) return value_;
  const double decay = std::pow(rho_, steps);
  const double innovation = sigma_ * std::sqrt(std::max(0.0, 1.0 - decay * decay));
  value_ = decay * value_ + innovation * normal_(engine_);
  return value_;
}

std::vector<double> correlated_sf_sequence(int n_points, double delta_m, double sigma_db,
                                           double beta, double x_c_m, std::mt19937_64 engine) {
  if (n_points < 1) throw std::invalid_argument("correlated_sf_sequence: need n_points >= 1");
  ShadowingProcess process(sigma_db, sf_step_correlation(delta_m, beta, x_c_m),
                           std::move(engine));
  std::vector<double> seq;
  seq.reserve(static_cast<std::size_t>(n_points));
  seq.push_back(process.current_db());
  for (int k = 1; k < n_points; ++k) seq.push_back(process.advance());
  return seq;
}

}  // namespace hocsim
