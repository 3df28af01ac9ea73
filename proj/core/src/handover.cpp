// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 hocsim contributors

#include "hocsim/handover.hpp"

#include <limits>
#include <stdexcept>

namespace hocsim {

namespace {
constexpr double kNoRsrp = -std::numeric_limits<double>::infinity();
}

void A3Config::validate() const {
  if (m_hyst_db <= 0.0 || ttt_s <= 0.0 || gap_s <= 0.0)
    throw std::invalid_argument("A3Config: all parameters must be positive");
}

CellId strongest_cell(std::span<const Measurement> measurements) {
  if (measurements.empty()) throw std::invalid_argument("strongest_cell: empty measurement set");
  const Measurement* best = &measurements[0];
  for (const auto& m : measurements.subspan(1)) {
    if (m.rsrp_dbm > best->rsrp_dbm ||
        (m.rsrp_dbm == best->rsrp_dbm && m.cell < best->cell)) {
      best = &m;
    }
  }
  return best->cell;
}

std::optional<HandoverEvent> HandoverState::step(double t_s,
                                                 std::span<const Measurement> measurements,
                                                 const A3Config& cfg) {
  // Single pass: serving RSRP and the strongest non-serving candidate.
  // A serving cell that dropped out of the candidate set measures as -inf,
  // so any candidate immediately satisfies the A3 condition against it.
  double serving_rsrp = kNoRsrp;
  const Measurement* best = nullptr;
  for (const auto& m : measurements) {
    if (m.cell == serving_) {
      serving_rsrp = m.rsrp_dbm;
      continue;
    }
    if (best == nullptr || m.rsrp_dbm > best->rsrp_dbm ||
        (m.rsrp_dbm == best->rsrp_dbm && m.cell < best->cell)) {
      best = &m;
    }
  }

  if (best == nullptr || !(best->rsrp_dbm > serving_rsrp + cfg.m_hyst_db)) {
    pending_.reset();
    return std::nullopt;
  }

  if (!pending_ || *pending_ != best->cell) {
    // Arm (or re-arm toward a new target); the timer restarts.
    pending_ = best->cell;
    trigger_time_s_ = t_s;
    return std::nullopt;
  }

  if (t_s - trigger_time_s_ >= cfg.ttt_s) {
    HandoverEvent event{t_s, serving_, *pending_};
    serving_ = *pending_;
    pending_.reset();
    ++hoc_;
    return event;
  }
  return std::nullopt;
}

int count_handovers(std::span<const MeasurementFrame> series, const A3Config& cfg,
                    std::vector<HandoverEvent>* event_log) {
  cfg.validate();
  if (series.empty()) throw std::invalid_argument("count_handovers: empty series");

  std::optional<HandoverState> state;
  for (const auto& frame : series) {
    if (!state) {
      if (!frame.cells.empty()) state.emplace(strongest_cell(frame.cells));
      continue;
    }
    auto event = state->step(frame.time_s, frame.cells, cfg);
    if (event && event_log) event_log->push_back(*event);
  }
  return state ? state->hoc() : 0;
}

}  // namespace hocsim
