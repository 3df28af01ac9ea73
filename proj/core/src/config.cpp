// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 hocsim contributors

#include "hocsim/config.hpp"

#include <charconv>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <system_error>

namespace hocsim {

namespace {

std::string trim(std::string_view s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string_view::npos) return {};
  const auto end = s.find_last_not_of(" \t\r");
  return std::string(s.substr(begin, end - begin + 1));
}

std::string format_double(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

std::string format_list(const std::vector<double>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ' ';
    out += format_double(values[i]);
  }
  return out;
}

struct Parser {
  std::string_view file;
  int line = 0;

  [[noreturn]] void fail(const std::string& message) const { throw ConfigError(file, line, message); }

  double number(const std::string& value) const {
    double out = 0.0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || ptr != value.data() + value.size())
      fail("expected a number, got '" + value + "'");
    return out;
  }

  std::vector<double> number_list(const std::string& value) const {
    std::vector<double> out;
    std::istringstream ss(value);
    std::string token;
    while (ss >> token) {
      if (!token.empty() && token.back() == ',') token.pop_back();
      if (token.empty()) continue;
      out.push_back(number(token));
    }
    if (out.empty()) fail("expected at least one number");
    return out;
  }

  int integer(const std::string& value) const {
    int out = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || ptr != value.data() + value.size())
      fail("expected an integer, got '" + value + "'");
    return out;
  }

  std::uint64_t unsigned64(const std::string& value) const {
    std::uint64_t out = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || ptr != value.data() + value.size())
      fail("expected an unsigned integer, got '" + value + "'");
    return out;
  }
};

}  // namespace

ConfigError::ConfigError(std::string_view file, int line_no, const std::string& message)
    : std::runtime_error(std::string(file) + ":" + std::to_string(line_no) + ": " + message),
      line(line_no) {}

std::vector<ScenarioConfig> SimulationPlan::scenarios() const {
  std::vector<ScenarioConfig> out;
  out.reserve(v_kmh.size() * lambda_gbs_per_km2.size() * t_window_s.size());
  for (double v : v_kmh) {
    for (double lambda : lambda_gbs_per_km2) {
      for (double t : t_window_s) {
        ScenarioConfig sc = base;
        sc.v_kmh = v;
        sc.lambda_gbs_per_km2 = lambda;
        sc.t_window_s = t;
        sc.a3.gap_s = sc.gap_s;
        out.push_back(sc);
      }
    }
  }
  return out;
}

SimulationPlan parse_config(std::istream& input, std::string_view filename) {
  SimulationPlan plan;
  Parser p{filename, 0};
  std::string section;
  std::string raw;

  while (std::getline(input, raw)) {
    ++p.line;
    std::string_view view = raw;
    if (const auto hash = view.find('#'); hash != std::string_view::npos)
      view = view.substr(0, hash);
    const std::string text = trim(view);
    if (text.empty()) continue;

    if (text.front() == '[') {
      if (text.back() != ']') p.fail("unterminated section header");
      section = trim(std::string_view(text).substr(1, text.size() - 2));
      if (section != "scenario" && section != "antenna" && section != "channel" &&
          section != "handover" && section != "campaign")
        p.fail("unknown section '" + section + "'");
      continue;
    }

    const auto eq = text.find('=');
    if (eq == std::string::npos) p.fail("expected 'key = value'");
    const std::string key = trim(std::string_view(text).substr(0, eq));
    const std::string value = trim(std::string_view(text).substr(eq + 1));
    if (key.empty()) p.fail("empty key");
    if (value.empty()) p.fail("empty value for key '" + key + "'");
    if (section.empty()) p.fail("key '" + key + "' outside of any section");

    ScenarioConfig& base = plan.base;
    if (section == "scenario") {
      if (key == "v_kmh") plan.v_kmh = p.number_list(value);
      else if (key == "lambda_gbs_per_km2") plan.lambda_gbs_per_km2 = p.number_list(value);
      else if (key == "t_window_s") plan.t_window_s = p.number_list(value);
      else if (key == "gap_s") base.gap_s = p.number(value);
      else if (key == "h_uav_m") base.h_uav_m = p.number(value);
      else if (key == "h_gbs_m") base.h_gbs_m = p.number(value);
      else p.fail("unknown key '" + key + "' in [scenario]");
    } else if (section == "antenna") {
      if (key == "g_max_dbi") base.element.g_max_dbi = p.number(value);
      else if (key == "phi_3db_deg") base.element.phi_3db_deg = p.number(value);
      else if (key == "theta_3db_deg") base.element.theta_3db_deg = p.number(value);
      else if (key == "front_back_db") base.element.a_m_db = p.number(value);
      else if (key == "sla_v_db") base.element.sla_v_db = p.number(value);
      else if (key == "m_v") base.array.m_v = p.integer(value);
      else if (key == "m_h") base.array.m_h = p.integer(value);
      else if (key == "spacing_v_wl") base.array.spacing_v_wl = p.number(value);
      else if (key == "spacing_h_wl") base.array.spacing_h_wl = p.number(value);
      else if (key == "tilt_deg") base.array.tilt_deg = p.number(value);
      else if (key == "steer_azimuth_deg") base.array.steer_azimuth_deg = p.number(value);
      else if (key == "rho") base.array.rho = p.number(value);
      else if (key == "steer_mode") {
        if (value == "downtilt") base.array.steer_mode = SteerMode::downtilt;
        else if (value == "zenith") base.array.steer_mode = SteerMode::zenith;
        else p.fail("steer_mode must be 'downtilt' or 'zenith', got '" + value + "'");
      } else p.fail("unknown key '" + key + "' in [antenna]");
    } else if (section == "channel") {
      if (key == "fc_ghz") base.channel.fc_ghz = p.number(value);
      else if (key == "p_gbs_dbm") base.channel.p_gbs_dbm = p.number(value);
      else if (key == "beta") base.channel.beta = p.number(value);
      else if (key == "x_c_m") base.channel.x_c_m = p.number(value);
      else p.fail("unknown key '" + key + "' in [channel]");
    } else if (section == "handover") {
      if (key == "m_hyst_db") base.a3.m_hyst_db = p.number(value);
      else if (key == "ttt_s") base.a3.ttt_s = p.number(value);
      else p.fail("unknown key '" + key + "' in [handover]");
    } else {  // campaign
      if (key == "n_trials") base.n_trials = p.integer(value);
      else if (key == "master_seed") base.master_seed = p.unsigned64(value);
      else if (key == "workers") plan.workers = p.integer(value);
      else if (key == "guard_margin_m") base.guard_margin_m = p.number(value);
      else if (key == "prune_radius_m") base.prune_radius_m = p.number(value);
      else p.fail("unknown key '" + key + "' in [campaign]");
    }
  }

  plan.base.a3.gap_s = plan.base.gap_s;
  return plan;
}

SimulationPlan parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::system_error(errno, std::generic_category(), "cannot open " + path);
  return parse_config(in, path);
}

std::string serialize_config(const SimulationPlan& plan) {
  const ScenarioConfig& b = plan.base;
  std::ostringstream os;
  os << "[scenario]\n"
     << "v_kmh = " << format_list(plan.v_kmh) << "\n"
     << "lambda_gbs_per_km2 = " << format_list(plan.lambda_gbs_per_km2) << "\n"
     << "t_window_s = " << format_list(plan.t_window_s) << "\n"
     << "gap_s = " << format_double(b.gap_s) << "\n"
     << "h_uav_m = " << format_double(b.h_uav_m) << "\n"
     << "h_gbs_m = " << format_double(b.h_gbs_m) << "\n"
     << "\n[antenna]\n"
     << "g_max_dbi = " << format_double(b.element.g_max_dbi) << "\n"
     << "phi_3db_deg = " << format_double(b.element.phi_3db_deg) << "\n"
     << "theta_3db_deg = " << format_double(b.element.theta_3db_deg) << "\n"
     << "front_back_db = " << format_double(b.element.a_m_db) << "\n"
     << "sla_v_db = " << format_double(b.element.sla_v_db) << "\n"
     << "m_v = " << b.array.m_v << "\n"
     << "m_h = " << b.array.m_h << "\n"
     << "spacing_v_wl = " << format_double(b.array.spacing_v_wl) << "\n"
     << "spacing_h_wl = " << format_double(b.array.spacing_h_wl) << "\n"
     << "tilt_deg = " << format_double(b.array.tilt_deg) << "\n"
     << "steer_azimuth_deg = " << format_double(b.array.steer_azimuth_deg) << "\n"
     << "rho = " << format_double(b.array.rho) << "\n"
     << "steer_mode = " << (b.array.steer_mode == SteerMode::downtilt ? "downtilt" : "zenith")
     << "\n"
     << "\n[channel]\n"
     << "fc_ghz = " << format_double(b.channel.fc_ghz) << "\n"
     << "p_gbs_dbm = " << format_double(b.channel.p_gbs_dbm) << "\n"
     << "beta = " << format_double(b.channel.beta) << "\n"
     << "x_c_m = " << format_double(b.channel.x_c_m) << "\n"
     << "\n[handover]\n"
     << "m_hyst_db = " << format_double(b.a3.m_hyst_db) << "\n"
     << "ttt_s = " << format_double(b.a3.ttt_s) << "\n"
     << "\n[campaign]\n"
     << "n_trials = " << b.n_trials << "\n"
     << "master_seed = " << b.master_seed << "\n"
     << "workers = " << plan.workers << "\n"
     << "guard_margin_m = " << format_double(b.guard_margin_m) << "\n"
     << "prune_radius_m = " << format_double(b.prune_radius_m) << "\n";
  return os.str();
}

std::string scenario_file_tag(const ScenarioConfig& config) {
  return "v" + format_double(config.v_kmh) + "_l" + format_double(config.lambda_gbs_per_km2) +
         "_T" + format_double(config.t_window_s);
}

}  // namespace hocsim
