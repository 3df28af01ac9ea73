// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 hocsim contributors

#pragma once

#include <span>

#include "hocsim/campaign.hpp"
#include "hocsim/statistics.hpp"

namespace hocsim {

/// Expected handovers per km/h of velocity: K = a * lambda_gbs^b * T with T
/// in hours. The Poisson mean of the handover count is lambda = K * v.
struct RateCoefficient {
  double k = 0.0;
};

RateCoefficient rate_coefficient(const FitParams& fit, double lambda_gbs_per_km2,
                                 double t_window_s);

/// Velocity estimate in km/h from a single count.
double estimate_velocity_kmh(int hoc, RateCoefficient k);

/// Sequence form: mean(h) / K. Unbiased by linearity.
double estimate_velocity_kmh(std::span<const int> hocs, RateCoefficient k);

/// Fisher information of the count model about v: K / v.
double fisher_information(double v_kmh, RateCoefficient k);

/// Lower bound on the variance of any unbiased velocity estimator: v / K,
/// in (km/h)^2.
double crlb_variance(double v_kmh, RateCoefficient k);

/// E[d log f / dv] truncated at `truncation`; analytically zero, so the
/// returned residual measures only the truncated tail.
double regularity_residual(double v_kmh, RateCoefficient k, int truncation);

struct EstimatorReport {
  double v_true_kmh = 0.0;
  double mean_vhat_kmh = 0.0;
  double var_vhat = 0.0;  // (km/h)^2, sample variance
  double crlb = 0.0;      // (km/h)^2 at v_true
  double rmse_kmh = 0.0;
  int n = 0;
};

/// Empirical bias/variance/RMSE of vhat = h/K against the known true velocity.
EstimatorReport evaluate(std::span<const int> hocs, double v_true_kmh, RateCoefficient k);
EstimatorReport evaluate(const HocDataset& dataset, const FitParams& fit);

}  // namespace hocsim
