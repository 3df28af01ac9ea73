// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 hocsim contributors

#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace hocsim {

struct ChannelParams {
  double fc_ghz = 1.5;
  double p_gbs_dbm = 46.0;
  double beta = 0.82;    // shadow-fading correlation coefficient
  double x_c_m = 100.0;  // decorrelation distance

  void validate() const;  // throws std::invalid_argument
};

/// Height-dependent LoS shadow-fading standard deviation in dB.
/// Valid for UAV heights in [10, 300] m.
double sigma_sf_db(double h_uav_m);

/// Rural-macro aerial LoS path loss in dB, excluding shadow fading.
/// fc is in GHz; valid for UAV heights in [10, 300] m and d3d > 0.
double path_loss_db(double d3d_m, double h_uav_m, double fc_ghz);

/// Per-step correlation of the AR(1) shadow-fading recursion for waypoints
/// separated by delta_m meters.
double sf_step_correlation(double delta_m, double beta, double x_c_m);

/// Received power in dBm.
inline double rsrp_dbm(double p_gbs_dbm, double gain_db, double path_loss_db, double sf_db) {
  return p_gbs_dbm + gain_db - (path_loss_db + sf_db);
}

/// Stationary first-order autoregressive shadow-fading state for one link.
/// The marginal is N(0, sigma^2) at every step; the autocovariance at lag m
/// is sigma^2 * rho_step^m. advance(m) jumps m steps with a single draw,
/// which is distributionally exact for a first-order Markov process.
class ShadowingProcess {
 public:
  ShadowingProcess(double sigma_db, double rho_step, std::mt19937_64 engine);

  double current_db() const { return value_; }
  double rho_step() const { return rho_; }
  double sigma_db() const { return sigma_; }

  /// Advance the state by `steps` measurement gaps and return the new value.
  double advance(int steps = 1);

 private:
  double sigma_;
  double rho_;
  double value_;
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_;
};

/// Zero-mean Gaussian sequence with cov(s_i, s_j) = sigma^2 beta^(|i-j| delta / x_c),
/// generated by the exact AR(1) recursion.
std::vector<double> correlated_sf_sequence(int n_points, double delta_m, double sigma_db,
                                           double beta, double x_c_m, std::mt19937_64 engine);

}  // namespace hocsim
