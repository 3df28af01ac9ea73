// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 hocsim contributors

#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace hocsim {

/// One sector face of a site; the unit of handover.
struct CellId {
  std::int32_t site_id = 0;
  std::int8_t sector = 0;  // 0..2

  friend auto operator<=>(const CellId&, const CellId&) = default;
};

/// A3-event parameters: hysteresis margin, time-to-trigger and the
/// measurement gap between RSRP samples.
struct A3Config {
  double m_hyst_db = 3.0;
  double ttt_s = 0.160;
  double gap_s = 0.200;

  void validate() const;  // throws std::invalid_argument
};

struct Measurement {
  CellId cell;
  double rsrp_dbm = 0.0;
};

struct MeasurementFrame {
  double time_s = 0.0;
  std::vector<Measurement> cells;
};

struct HandoverEvent {
  double time_s = 0.0;
  CellId from;
  CellId to;
};

/// Cell with maximum RSRP; ties broken by smallest (site_id, sector).
CellId strongest_cell(std::span<const Measurement> measurements);

/// Discrete-time A3 + hysteresis + time-to-trigger state machine.
///
/// The A3 condition is evaluated only at measurement instants. A pending
/// trigger executes at the first instant at least ttt after it was armed at
/// which the condition toward the same target still holds; a failure or a
/// target change in between resets the timer.
class HandoverState {
 public:
  explicit HandoverState(CellId serving) : serving_(serving) {}

  CellId serving() const { return serving_; }
  int hoc() const { return hoc_; }
  std::optional<CellId> pending_target() const { return pending_; }

  /// Process the measurements taken at time t; returns the executed handover
  /// if the pending trigger fired at this instant.
  std::optional<HandoverEvent> step(double t_s, std::span<const Measurement> measurements,
                                    const A3Config& cfg);

 private:
  CellId serving_;
  std::optional<CellId> pending_;
  double trigger_time_s_ = 0.0;
  int hoc_ = 0;
};

/// Fold the state machine over a uniformly spaced RSRP series: attach to the
/// strongest cell at the first non-empty frame, then count executed
/// handovers. Optionally records the event timeline.
int count_handovers(std::span<const MeasurementFrame> series, const A3Config& cfg,
                    std::vector<HandoverEvent>* event_log = nullptr);

}  // namespace hocsim
