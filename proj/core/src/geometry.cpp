// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 hocsim contributors

#include "hocsim/geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace hocsim {

namespace {
constexpr double kDegPerRad = 180.0 / std::numbers::pi;
constexpr double kRadPerDeg = std::numbers::pi / 180.0;
}  // namespace

double wrap_deg(double angle_deg) {
  double a = std::fmod(angle_deg, 360.0);
  if (a <= -180.0) a += 360.0;
  if (a > 180.0) a -= 360.0;
  return a;
}

GbsSite GbsSite::make(std::int32_t id, Vec2 pos, double height_m, double rotation_deg) {
  if (height_m <= 0.0) throw std::invalid_argument("GbsSite: height must be positive");
  GbsSite site;
  site.site_id = id;
  site.position = pos;
  site.height_m = height_m;
  for (int s = 0; s < 3; ++s) {
    double b = std::fmod(rotation_deg + 120.0 * s, 360.0);
    if (b < 0.0) b += 360.0;
    site.boresight_deg[static_cast<std::size_t>(s)] = b;
  }
  return site;
}

void Trajectory::validate() const {
  if (velocity_kmh < 0.0) throw std::invalid_argument("Trajectory: velocity must be >= 0");
  if (height_m < 10.0 || height_m > 300.0)
    throw std::invalid_argument("Trajectory: UAV height must be in [10, 300] m, got " +
                                std::to_string(height_m));
  if (gap_s <= 0.0) throw std::invalid_argument("Trajectory: measurement gap must be positive");
  if (duration_s <= 0.0) throw std::invalid_argument("Trajectory: duration must be positive");
}

std::vector<GbsSite> sample_ppp(double intensity_per_km2, const SimulationRegion& region,
                                double site_height_m, std::mt19937_64& rng) {
  if (intensity_per_km2 <= 0.0)
    throw std::invalid_argument("sample_ppp: intensity must be positive");
  if (!region.valid()) throw std::invalid_argument("sample_ppp: degenerate region");

  const double mean_count = intensity_per_km2 * region.area_km2();
  std::poisson_distribution<int> count_dist(mean_count);
  const int n = count_dist(rng);

  std::uniform_real_distribution<double> ux(region.x_min, region.x_max);
  std::uniform_real_distribution<double> uy(region.y_min, region.y_max);
  std::uniform_real_distribution<double> urot(0.0, 120.0);

  std::vector<GbsSite> sites;
  sites.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double x = ux(rng);
    const double y = uy(rng);
    const double rot = urot(rng);
    sites.push_back(GbsSite::make(i, Vec2{x, y}, site_height_m, rot));
  }
  return sites;
}

std::vector<Waypoint> waypoints(const Trajectory& trajectory) {
  trajectory.validate();
  // Tolerance so that durations that are an exact multiple of the gap in
  // real arithmetic stay one (0.6/0.2 rounds below 3 in binary).
  const int n =
      static_cast<int>(std::floor(trajectory.duration_s / trajectory.gap_s + 1e-9)) + 1;
  const double step_m = trajectory.velocity_kmh * kKmhToMps * trajectory.gap_s;
  const double heading_rad = trajectory.heading_deg * kRadPerDeg;
  const double dx = std::cos(heading_rad);
  const double dy = std::sin(heading_rad);

  std::vector<Waypoint> wps;
  wps.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const double s = step_m * k;
    wps.push_back(Waypoint{k, k * trajectory.gap_s, trajectory.start.x + s * dx,
                           trajectory.start.y + s * dy, trajectory.height_m});
  }
  return wps;
}

LinkGeometry link_geometry(const Waypoint& wp, const GbsSite& site, int sector_index) {
  const double dx = wp.x - site.position.x;
  const double dy = wp.y - site.position.y;
  const double dz = wp.z - site.height_m;
  const double d2d = std::hypot(dx, dy);
  const double d3d = std::hypot(d2d, dz);

  LinkGeometry g;
  g.d2d_m = d2d;
  g.d3d_m = d3d;
  // Zenith angle at the GBS antenna toward the UAV: 0 when the UAV is
  // directly overhead, >90 when it is below the antenna height.
  g.zenith_deg = std::atan2(d2d, dz) * kDegPerRad;
  const double azimuth_global = std::atan2(dy, dx) * kDegPerRad;
  g.azimuth_deg =
      wrap_deg(azimuth_global - site.boresight_deg[static_cast<std::size_t>(sector_index)]);
  return g;
}

}  // namespace hocsim
