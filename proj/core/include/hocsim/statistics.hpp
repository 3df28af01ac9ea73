// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 hocsim contributors

#pragma once

#include <span>
#include <stdexcept>
#include <vector>

namespace hocsim {

/// Relative-frequency PMF over the contiguous support 0..max(samples).
struct EmpiricalPmf {
  std::vector<double> probs;  // probs[h] = relative frequency of count h

  int support_size() const { return static_cast<int>(probs.size()); }
};

/// Power-law parameters of the handover rate: lambda = a * lambda_gbs^b * d,
/// with d the distance covered in km.
struct FitParams {
  double a = 0.0;
  double b = 0.0;
  double residual = 0.0;  // sum of squared log-residuals
};

/// One scenario's contribution to the power fit.
struct FitPoint {
  double lambda_gbs = 0.0;  // sites per km^2
  double d_km = 0.0;        // distance covered, v*T in km
  double lambda_hat = 0.0;  // fitted Poisson mean of the scenario
};

/// Raised when the fit inputs cannot identify both parameters
/// (fewer than two distinct lambda_gbs values).
struct UnidentifiableFit : std::runtime_error {
  using std::runtime_error::runtime_error;
};

EmpiricalPmf empirical_pmf(std::span<const int> samples);

/// e^-lambda lambda^h / h!, evaluated in log-space.
double poisson_pmf(double lambda, int h);

/// Maximum-likelihood Poisson mean: the sample mean.
double poisson_mle(std::span<const int> samples);

/// Least squares on log(lambda_hat / d) = log a + b log lambda_gbs.
/// All lambda_hat and d must be positive; callers drop zero-count scenarios.
FitParams power_fit(std::span<const FitPoint> points);

/// One Gauss-Newton step in linear space on top of the log-space solution,
/// for parity with generic curve-fitting tools.
FitParams power_fit_refined(std::span<const FitPoint> points);

/// Mean squared difference between the empirical PMF and the Poisson model
/// over the empirical support.
double pmf_mse(const EmpiricalPmf& empirical, double lambda);

}  // namespace hocsim
