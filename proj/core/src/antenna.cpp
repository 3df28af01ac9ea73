// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 hocsim contributors

#include "hocsim/antenna.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hocsim {

namespace {

constexpr double kRadPerDeg = std::numbers::pi / 180.0;

// Squared magnitude of the Dirichlet kernel sum_{k=0}^{m-1} e^{jkx}.
// The removable singularities at x = 2*pi*k have limit magnitude m.
double dirichlet_sq(int m, double x) {
  const double half = 0.5 * x;
  const double den = std::sin(half);
  if (std::abs(den) < 1e-12) return static_cast<double>(m) * static_cast<double>(m);
  const double r = std::sin(m * half) / den;
  return r * r;
}

}  // namespace

void ElementPattern::validate() const {
  if (phi_3db_deg <= 0.0 || theta_3db_deg <= 0.0 || a_m_db <= 0.0 || sla_v_db <= 0.0)
    throw std::invalid_argument("ElementPattern: beamwidths and caps must be positive");
}

void ArrayConfig::validate() const {
  if (m_v < 1 || m_h < 1) throw std::invalid_argument("ArrayConfig: element counts must be >= 1");
  if (rho < 0.0 || rho > 1.0) throw std::invalid_argument("ArrayConfig: rho must be in [0, 1]");
  if (spacing_v_wl <= 0.0 || spacing_h_wl <= 0.0)
    throw std::invalid_argument("ArrayConfig: element spacing must be positive");
}

double element_gain_db(double zenith_deg, double azimuth_deg, const ElementPattern& pattern) {
  const double phi = wrap_deg(azimuth_deg);
  const double ph = phi / pattern.phi_3db_deg;
  const double th = (zenith_deg - 90.0) / pattern.theta_3db_deg;
  const double att_h = std::min(12.0 * ph * ph, pattern.a_m_db);
  const double att_v = std::min(12.0 * th * th, pattern.sla_v_db);
  return pattern.g_max_dbi - std::min(att_h + att_v, pattern.a_m_db);
}

SteeredArrayFactor::SteeredArrayFactor(const ArrayConfig& cfg)
    : m_v_(cfg.m_v),
      m_h_(cfg.m_h),
      inv_n_(1.0 / static_cast<double>(cfg.n())),
      rho_(cfg.rho),
      wave_v_(2.0 * std::numbers::pi * cfg.spacing_v_wl),
      wave_h_(2.0 * std::numbers::pi * cfg.spacing_h_wl) {
  cfg.validate();
  const double theta_s = cfg.steer_zenith_deg() * kRadPerDeg;
  const double phi_s = cfg.steer_azimuth_deg * kRadPerDeg;
  cos_steer_zenith_ = std::cos(theta_s);
  steer_h_ = std::sin(theta_s) * std::sin(phi_s);
}

double SteeredArrayFactor::eval_db(double cos_theta, double sin_theta, double sin_phi) const {
  const double psi_v = cos_theta - cos_steer_zenith_;
  double coherent_sq = dirichlet_sq(m_v_, wave_v_ * psi_v);
  if (m_h_ > 1) {
    const double psi_h = sin_theta * sin_phi - steer_h_;
    coherent_sq *= dirichlet_sq(m_h_, wave_h_ * psi_h);
  }
  coherent_sq *= inv_n_;

  const double arg = 1.0 + rho_ * (coherent_sq - 1.0);
  if (arg <= 0.0) return kArrayFactorFloorDb;
  return std::max(10.0 * std::log10(arg), kArrayFactorFloorDb);
}

double array_factor_db(double zenith_deg, double azimuth_deg, const ArrayConfig& cfg) {
  const double theta = zenith_deg * kRadPerDeg;
  const double phi = azimuth_deg * kRadPerDeg;
  return SteeredArrayFactor(cfg).eval_db(std::cos(theta), std::sin(theta), std::sin(phi));
}

double sector_gain_db(const LinkGeometry& geom, const ElementPattern& pattern,
                      const ArrayConfig& cfg) {
  return element_gain_db(geom.zenith_deg, geom.azimuth_deg, pattern) +
         array_factor_db(geom.zenith_deg, geom.azimuth_deg, cfg);
}

}  // namespace hocsim
