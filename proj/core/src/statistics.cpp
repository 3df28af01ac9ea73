// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 hocsim contributors

#include "hocsim/statistics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hocsim {

EmpiricalPmf empirical_pmf(std::span<const int> samples) {
  if (samples.empty()) throw std::invalid_argument("empirical_pmf: empty sample set");
  int h_max = 0;
  for (int s : samples) {
    if (s < 0) throw std::invalid_argument("empirical_pmf: negative count");
    h_max = std::max(h_max, s);
  }
  EmpiricalPmf pmf;
  pmf.probs.assign(static_cast<std::size_t>(h_max) + 1, 0.0);
  const double w = 1.0 / static_cast<double>(samples.size());
  for (int s : samples) pmf.probs[static_cast<std::size_t>(s)] += w;
  return pmf;
}

double poisson_pmf(double lambda, int h) {
  if (lambda <= 0.0) throw std::invalid_argument("poisson_pmf: lambda must be positive");
  if (h < 0) throw std::invalid_argument("poisson_pmf: h must be >= 0");
  return std::exp(h * std::log(lambda) - lambda - std::lgamma(static_cast<double>(h) + 1.0));
}

double poisson_mle(std::span<const int> samples) {
  if (samples.empty()) throw std::invalid_argument("poisson_mle: empty sample set");
  double sum = 0.0;
  for (int s : samples) {
    if (s < 0) throw std::invalid_argument("poisson_mle: negative count");
    sum += s;
  }
  return sum / static_cast<double>(samples.size());
}

namespace {

void check_fit_points(std::span<const FitPoint> points) {
  if (points.size() < 2) throw UnidentifiableFit("power_fit: need at least two points");
  for (const auto& p : points) {
    if (p.lambda_gbs <= 0.0 || p.d_km <= 0.0)
      throw std::invalid_argument("power_fit: lambda_gbs and d must be positive");
    if (p.lambda_hat <= 0.0)
      throw std::invalid_argument("power_fit: lambda_hat must be positive");
  }
  const double first = points[0].lambda_gbs;
  const bool distinct = std::any_of(points.begin(), points.end(),
                                    [&](const FitPoint& p) { return p.lambda_gbs != first; });
  if (!distinct)
    throw UnidentifiableFit("power_fit: a single distinct lambda_gbs cannot identify (a, b)");
}

}  // namespace

FitParams power_fit(std::span<const FitPoint> points) {
  check_fit_points(points);

  // The model is exactly log-linear given d as a known multiplier:
  // y = log(lambda_hat / d) = log a + b x, x = log lambda_gbs.
  double sx = 0.0, sy = 0.0;
  for (const auto& p : points) {
    sx += std::log(p.lambda_gbs);
    sy += std::log(p.lambda_hat / p.d_km);
  }
  const double n = static_cast<double>(points.size());
  const double mx = sx / n;
  const double my = sy / n;

  double sxx = 0.0, sxy = 0.0;
  for (const auto& p : points) {
    const double dx = std::log(p.lambda_gbs) - mx;
    const double dy = std::log(p.lambda_hat / p.d_km) - my;
    sxx += dx * dx;
    sxy += dx * dy;
  }

  FitParams fit;
  fit.b = sxy / sxx;
  fit.a = std::exp(my - fit.b * mx);

  for (const auto& p : points) {
    const double r = std::log(p.lambda_hat / p.d_km) - (std::log(fit.a) + fit.b * std::log(p.lambda_gbs));
    fit.residual += r * r;
  }
  return fit;
}

FitParams power_fit_refined(std::span<const FitPoint> points) {
  FitParams fit = power_fit(points);

  // One Gauss-Newton step on sum_i (lambda_hat_i - a lambda_i^b d_i)^2.
  // Normal equations J^T J delta = J^T r with columns (d/da, d/db).
  double jaa = 0.0, jab = 0.0, jbb = 0.0, ra = 0.0, rb = 0.0;
  for (const auto& p : points) {
    const double pw = std::pow(p.lambda_gbs, fit.b);
    const double model = fit.a * pw * p.d_km;
    const double resid = p.lambda_hat - model;
    const double ja = pw * p.d_km;
    const double jb = model * std::log(p.lambda_gbs);
    jaa += ja * ja;
    jab += ja * jb;
    jbb += jb * jb;
    ra += ja * resid;
    rb += jb * resid;
  }
  const double det = jaa * jbb - jab * jab;
  if (std::abs(det) > 1e-30) {
    fit.a += (jbb * ra - jab * rb) / det;
    fit.b += (jaa * rb - jab * ra) / det;
  }
  if (fit.a <= 0.0) return power_fit(points);  // refinement left the model's domain

  fit.residual = 0.0;
  for (const auto& p : points) {
    const double r =
        std::log(p.lambda_hat / p.d_km) - (std::log(fit.a) + fit.b * std::log(p.lambda_gbs));
    fit.residual += r * r;
  }
  return fit;
}

double pmf_mse(const EmpiricalPmf& empirical, double lambda) {
  if (empirical.probs.empty()) throw std::invalid_argument("pmf_mse: empty PMF");
  const int support = empirical.support_size();
  double acc = 0.0;
  for (int h = 0; h < support; ++h) {
    const double diff = empirical.probs[static_cast<std::size_t>(h)] - poisson_pmf(lambda, h);
    acc += diff * diff;
  }
  return acc / static_cast<double>(support);
}

}  // namespace hocsim
