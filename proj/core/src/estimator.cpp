// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 hocsim contributors

#include "hocsim/estimator.hpp"

#include <cmath>
#include <stdexcept>

namespace hocsim {

RateCoefficient rate_coefficient(const FitParams& fit, double lambda_gbs_per_km2,
                                 double t_window_s) {
  if (fit.a <= 0.0) throw std::invalid_argument("rate_coefficient: fit parameter a must be > 0");
  if (lambda_gbs_per_km2 <= 0.0)
    throw std::invalid_argument("rate_coefficient: GBS density must be positive");
  if (t_window_s <= 0.0) throw std::invalid_argument("rate_coefficient: window must be positive");
  return RateCoefficient{fit.a * std::pow(lambda_gbs_per_km2, fit.b) * (t_window_s / 3600.0)};
}

double estimate_velocity_kmh(int hoc, RateCoefficient k) {
  if (k.k <= 0.0) throw std::invalid_argument("estimate_velocity: K must be positive");
  if (hoc < 0) throw std::invalid_argument("estimate_velocity: count must be >= 0");
  return static_cast<double>(hoc) / k.k;
}

double estimate_velocity_kmh(std::span<const int> hocs, RateCoefficient k) {
  if (k.k <= 0.0) throw std::invalid_argument("estimate_velocity: K must be positive");
  if (hocs.empty()) throw std::invalid_argument("estimate_velocity: empty count sequence");
  double sum = 0.0;
  for (int h : hocs) {
    if (h < 0) throw std::invalid_argument("estimate_velocity: count must be >= 0");
    sum += h;
  }
  return sum / static_cast<double>(hocs.size()) / k.k;
}

double fisher_information(double v_kmh, RateCoefficient k) {
  if (v_kmh <= 0.0) throw std::invalid_argument("fisher_information: v must be positive");
  if (k.k <= 0.0) throw std::invalid_argument("fisher_information: K must be positive");
  return k.k / v_kmh;
}

double crlb_variance(double v_kmh, RateCoefficient k) {
  if (v_kmh <= 0.0) throw std::invalid_argument("crlb: v must be positive");
  if (k.k <= 0.0) throw std::invalid_argument("crlb: K must be positive");
  return v_kmh / k.k;
}

double regularity_residual(double v_kmh, RateCoefficient k, int truncation) {
  if (v_kmh <= 0.0) throw std::invalid_argument("regularity_residual: v must be positive");
  if (k.k <= 0.0) throw std::invalid_argument("regularity_residual: K must be positive");
  if (truncation < 0) throw std::invalid_argument("regularity_residual: truncation must be >= 0");
  const double lambda = k.k * v_kmh;
  double acc = 0.0;
  for (int h = 0; h <= truncation; ++h) {
    // d log f / dv = -K (1 - h/lambda)
    acc += poisson_pmf(lambda, h) * (-k.k) * (1.0 - static_cast<double>(h) / lambda);
  }
  return acc;
}

EstimatorReport evaluate(std::span<const int> hocs, double v_true_kmh, RateCoefficient k) {
  if (hocs.size() < 2) throw std::invalid_argument("evaluate: need at least two samples");
  if (k.k <= 0.0) throw std::invalid_argument("evaluate: K must be positive");

  EstimatorReport report;
  report.v_true_kmh = v_true_kmh;
  report.n = static_cast<int>(hocs.size());

  double sum = 0.0;
  double sq_err = 0.0;
  for (int h : hocs) {
    const double vhat = estimate_velocity_kmh(h, k);
    sum += vhat;
    const double err = vhat - v_true_kmh;
    sq_err += err * err;
  }
  const double n = static_cast<double>(hocs.size());
  report.mean_vhat_kmh = sum / n;

  double var = 0.0;
  for (int h : hocs) {
    const double d = estimate_velocity_kmh(h, k) - report.mean_vhat_kmh;
    var += d * d;
  }
  report.var_vhat = var / (n - 1.0);
  report.crlb = v_true_kmh > 0.0 ? crlb_variance(v_true_kmh, k) : 0.0;
  report.rmse_kmh = std::sqrt(sq_err / n);
  return report;
}

EstimatorReport evaluate(const HocDataset& dataset, const FitParams& fit) {
  const auto hocs = dataset.hoc_values();
  const auto k =
      rate_coefficient(fit, dataset.config.lambda_gbs_per_km2, dataset.config.t_window_s);
  return evaluate(hocs, dataset.config.v_kmh, k);
}

}  // namespace hocsim
