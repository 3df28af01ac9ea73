// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 hocsim contributors

#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <vector>

namespace hocsim {

inline constexpr double kKmhToMps = 1.0 / 3.6;

/// Wrap an angle in degrees to (-180, 180].
double wrap_deg(double angle_deg);

struct Vec2 {
  double x = 0.0;  // meters
  double y = 0.0;  // meters
};

/// Axis-aligned rectangle that bounds the sampled site layout. The window is
/// the trajectory bounding box inflated by a guard margin; sites beyond it
/// contribute negligible power at 1.5 GHz.
struct SimulationRegion {
  double x_min = 0.0;
  double x_max = 0.0;
  double y_min = 0.0;
  double y_max = 0.0;

  double width_m() const { return x_max - x_min; }
  double height_m() const { return y_max - y_min; }
  double area_km2() const { return width_m() * height_m() * 1e-6; }
  bool valid() const { return x_max > x_min && y_max > y_min; }
};

/// One ground base station: a site position plus three sector faces whose
/// boresights are 120 degrees apart.
struct GbsSite {
  std::int32_t site_id = 0;
  Vec2 position;
  double height_m = 35.0;
  std::array<double, 3> boresight_deg{};  // {a, a+120, a+240}, wrapped to [0, 360)

  static GbsSite make(std::int32_t id, Vec2 pos, double height_m, double rotation_deg);
};

/// Linear constant-velocity flight at fixed height, sampled every gap_s.
struct Trajectory {
  Vec2 start;
  double heading_deg = 0.0;
  double velocity_kmh = 0.0;
  double height_m = 120.0;  // h_UAV
  double gap_s = 0.2;
  double duration_s = 100.0;  // measurement window T

  void validate() const;  // throws std::invalid_argument
};

struct Waypoint {
  std::int32_t index = 0;
  double time_s = 0.0;
  double x = 0.0;  // meters
  double y = 0.0;
  double z = 0.0;  // height above ground
};

/// Distances and antenna angles of one UAV-to-sector link.
struct LinkGeometry {
  double d2d_m = 0.0;
  double d3d_m = 0.0;
  double zenith_deg = 0.0;   // at the GBS antenna: 0 = straight up, 90 = horizon
  double azimuth_deg = 0.0;  // relative to the sector boresight, in (-180, 180]
};

/// Sample a homogeneous PPP of sites over the region. The site count is
/// Poisson(intensity * area), positions are i.i.d. uniform, and each site
/// gets an independent uniform sector rotation in [0, 120) degrees.
std::vector<GbsSite> sample_ppp(double intensity_per_km2, const SimulationRegion& region,
                                double site_height_m, std::mt19937_64& rng);

/// All measurement instants of the flight: floor(T/gap)+1 waypoints starting
/// at t = 0, spaced v*gap meters along the heading.
std::vector<Waypoint> waypoints(const Trajectory& trajectory);

LinkGeometry link_geometry(const Waypoint& wp, const GbsSite& site, int sector_index);

}  // namespace hocsim
