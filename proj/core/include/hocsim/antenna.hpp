// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 hocsim contributors

#pragma once

#include "hocsim/geometry.hpp"

namespace hocsim {

/// Output floor when the array-factor argument underflows to zero at a
/// perfect null. Keeps the arithmetic finite without affecting any argmax.
inline constexpr double kArrayFactorFloorDb = -250.0;

/// Single cross-polarized element radiation pattern (horizontal and vertical
/// cuts combined with a front-back cap).
struct ElementPattern {
  double phi_3db_deg = 65.0;
  double theta_3db_deg = 65.0;
  double a_m_db = 30.0;    // front-back ratio
  double sla_v_db = 30.0;  // side-lobe level limit
  double g_max_dbi = 8.0;

  void validate() const;  // throws std::invalid_argument
};

/// How the configured tilt angle maps to the steering zenith angle.
/// `downtilt` points the main lobe below the horizon (zenith 90 + tilt),
/// `zenith` uses the angle as-is, i.e. steers toward the sky.
enum class SteerMode { downtilt, zenith };

struct ArrayConfig {
  int m_v = 8;  // vertical elements
  int m_h = 1;  // horizontal elements
  double spacing_v_wl = 0.5;
  double spacing_h_wl = 0.5;
  double tilt_deg = 6.0;  // theta_D
  double steer_azimuth_deg = 0.0;
  double rho = 1.0;  // correlation coefficient
  SteerMode steer_mode = SteerMode::downtilt;

  int n() const { return m_v * m_h; }
  double steer_zenith_deg() const {
    return steer_mode == SteerMode::downtilt ? 90.0 + tilt_deg : tilt_deg;
  }
  void validate() const;
};

/// 3D element gain in dBi at a zenith/azimuth pair.
double element_gain_db(double zenith_deg, double azimuth_deg, const ElementPattern& pattern);

/// Array factor in dB of the steered uniform array.
double array_factor_db(double zenith_deg, double azimuth_deg, const ArrayConfig& cfg);

/// Array-factor evaluator with the steering terms precomputed. Takes the
/// direction cosines of the link directly, so bulk callers avoid the
/// angle conversions; array_factor_db delegates here.
class SteeredArrayFactor {
 public:
  explicit SteeredArrayFactor(const ArrayConfig& cfg);

  /// cos/sin of the link zenith angle, sine of the boresight-relative azimuth.
  double eval_db(double cos_theta, double sin_theta, double sin_phi) const;

  /// True when the factor does not depend on azimuth (single-column array).
  bool azimuth_invariant() const { return m_h_ == 1; }

 private:
  int m_v_;
  int m_h_;
  double inv_n_;
  double rho_;
  double wave_v_;  // 2*pi*spacing_v
  double wave_h_;
  double cos_steer_zenith_;
  double steer_h_;  // sin(theta_steer) * sin(phi_steer)
};

/// Combined sector gain: element gain plus array factor at the link angles.
double sector_gain_db(const LinkGeometry& geom, const ElementPattern& pattern,
                      const ArrayConfig& cfg);

}  // namespace hocsim
