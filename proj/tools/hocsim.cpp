// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 hocsim contributors

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hocsim/config.hpp"
#include "hocsim/estimator.hpp"
#include "hocsim/statistics.hpp"
#include "hocsim/version.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitUnidentifiable = 4;

// Defaults for the estimate/crlb commands when no fit report is given.
constexpr double kDefaultFitA = 0.2417;
constexpr double kDefaultFitB = 0.5278;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << content;
  out.flush();
  if (!out) throw IoError("failed writing " + path.string());
}

json scenario_meta(const hocsim::ScenarioConfig& sc) {
  return json{{"v_kmh", sc.v_kmh},
              {"lambda_gbs_per_km2", sc.lambda_gbs_per_km2},
              {"t_window_s", sc.t_window_s},
              {"n_trials", sc.n_trials}};
}

int cmd_simulate(const std::string& config_path, const std::string& out_dir, int workers_flag,
                 bool log_events, bool quiet) {
  const hocsim::SimulationPlan plan = hocsim::parse_config_file(config_path);
  const int workers = workers_flag != 0 ? workers_flag : plan.workers;

  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) throw IoError("cannot create output directory " + out_dir + ": " + ec.message());

  const auto scenarios = plan.scenarios();
  const std::string snapshot = hocsim::serialize_config(plan);
  json manifest{{"tool", "hocsim"},
                {"version", std::string(hocsim::kVersion)},
                {"created_utc", utc_timestamp()},
                {"master_seed", plan.base.master_seed},
                {"config_snapshot", "config_snapshot.ini"},
                {"config", snapshot},
                {"datasets", json::array()}};
  write_file(fs::path(out_dir) / "config_snapshot.ini", snapshot);

  for (const auto& sc : scenarios) {
    std::vector<std::vector<hocsim::HandoverEvent>> event_logs;
    const auto dataset =
        hocsim::run_dataset(sc, workers, log_events ? &event_logs : nullptr);
    const std::string tag = hocsim::scenario_file_tag(sc);
    const std::string file = "hoc_" + tag + ".csv";
    write_file(fs::path(out_dir) / file, hocsim::dataset_csv(dataset));

    if (log_events) {
      std::ostringstream ev;
      ev << "trial,time_s,from_site,from_sector,to_site,to_sector\n";
      for (std::size_t trial = 0; trial < event_logs.size(); ++trial) {
        for (const auto& e : event_logs[trial]) {
          ev << trial << ',' << e.time_s << ',' << e.from.site_id << ','
             << static_cast<int>(e.from.sector) << ',' << e.to.site_id << ','
             << static_cast<int>(e.to.sector) << '\n';
        }
      }
      write_file(fs::path(out_dir) / ("events_" + tag + ".csv"), ev.str());
    }

    json meta = scenario_meta(sc);
    meta["file"] = file;
    manifest["datasets"].push_back(meta);
    if (!quiet)
      std::cerr << "simulated " << tag << ": " << dataset.samples.size() << " trials\n";
  }

  write_file(fs::path(out_dir) / "manifest.json", manifest.dump(2) + "\n");
  return kExitOk;
}

std::vector<int> read_hoc_csv(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  std::string line;
  if (!std::getline(in, line) || line.rfind("trial,seed,hoc", 0) != 0)
    throw IoError(path.string() + ": expected 'trial,seed,hoc' header");
  std::vector<int> hocs;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto last_comma = line.rfind(',');
    if (last_comma == std::string::npos) throw IoError(path.string() + ": malformed row");
    hocs.push_back(std::stoi(line.substr(last_comma + 1)));
  }
  return hocs;
}

int cmd_fit(const std::string& data_dir, const std::string& out_path, bool refine, bool quiet) {
  const fs::path manifest_path = fs::path(data_dir) / "manifest.json";
  std::ifstream min(manifest_path);
  if (!min) throw IoError("cannot open " + manifest_path.string());
  json manifest = json::parse(min, nullptr, true, true);

  struct ScenarioFit {
    double v, lambda_gbs, t_s;
    int n;
    std::string file;
    double lambda_hat = 0.0;
    double mse = 0.0;
    hocsim::EmpiricalPmf pmf;
    bool included = false;
  };
  std::vector<ScenarioFit> rows;
  for (const auto& d : manifest.at("datasets")) {
    ScenarioFit row{d.at("v_kmh"), d.at("lambda_gbs_per_km2"), d.at("t_window_s"),
                    d.at("n_trials"), d.at("file")};
    const auto hocs = read_hoc_csv(fs::path(data_dir) / row.file);
    row.lambda_hat = hocsim::poisson_mle(hocs);
    row.pmf = hocsim::empirical_pmf(hocs);
    if (row.lambda_hat > 0.0) row.mse = hocsim::pmf_mse(row.pmf, row.lambda_hat);
    rows.push_back(std::move(row));
  }

  std::vector<hocsim::FitPoint> points;
  for (auto& row : rows) {
    const double d_km = row.v * (row.t_s / 3600.0);
    if (row.lambda_hat <= 0.0 || d_km <= 0.0) {
      std::cerr << "warning: dropping zero-rate scenario " << row.file
                << " from the power fit\n";
      continue;
    }
    row.included = true;
    points.push_back({row.lambda_gbs, d_km, row.lambda_hat});
  }

  const hocsim::FitParams fit =
      refine ? hocsim::power_fit_refined(points) : hocsim::power_fit(points);

  const fs::path out(out_path);
  const fs::path pmf_dir = out.has_parent_path() ? out.parent_path() : fs::path(".");
  std::error_code ec;
  fs::create_directories(pmf_dir, ec);

  json report{{"a", fit.a},
              {"b", fit.b},
              {"residual", fit.residual},
              {"refined", refine},
              {"scenarios", json::array()}};
  for (const auto& row : rows) {
    hocsim::ScenarioConfig key;
    key.v_kmh = row.v;
    key.lambda_gbs_per_km2 = row.lambda_gbs;
    key.t_window_s = row.t_s;
    const std::string pmf_file = "pmf_" + hocsim::scenario_file_tag(key) + ".csv";

    std::ostringstream pm;
    pm << "h,empirical,poisson\n";
    for (int h = 0; h < row.pmf.support_size(); ++h) {
      pm << h << ',' << row.pmf.probs[static_cast<std::size_t>(h)] << ','
         << (row.lambda_hat > 0.0 ? hocsim::poisson_pmf(row.lambda_hat, h) : (h == 0 ? 1.0 : 0.0))
         << '\n';
    }
    write_file(pmf_dir / pmf_file, pm.str());

    report["scenarios"].push_back(json{{"v_kmh", row.v},
                                       {"lambda_gbs_per_km2", row.lambda_gbs},
                                       {"t_window_s", row.t_s},
                                       {"n", row.n},
                                       {"lambda_hat", row.lambda_hat},
                                       {"pmf_mse", row.mse},
                                       {"included_in_fit", row.included},
                                       {"pmf_csv", pmf_file}});
  }
  write_file(out, report.dump(2) + "\n");
  if (!quiet)
    std::cerr << "fit: a = " << fit.a << ", b = " << fit.b << ", residual = " << fit.residual
              << "\n";
  return kExitOk;
}

int cmd_estimate(int hoc, double lambda_gbs, double t_seconds, double a, double b) {
  const auto k = hocsim::rate_coefficient(hocsim::FitParams{a, b, 0.0}, lambda_gbs, t_seconds);
  const double vhat = hocsim::estimate_velocity_kmh(hoc, k);
  const double sd = vhat > 0.0 ? std::sqrt(hocsim::crlb_variance(vhat, k)) : 0.0;
  std::cout << "v_hat_kmh = " << vhat << "\n";
  std::cout << "sqrt_crlb_at_vhat_kmh = " << sd << "\n";
  return kExitOk;
}

int cmd_crlb(const std::vector<double>& velocities, const std::vector<double>& densities,
             const std::vector<double>& windows, double a, double b, const std::string& out_path) {
  std::ostringstream os;
  os << "v,lambda_gbs,T_s,sqrt_crlb\n";
  for (double v : velocities) {
    for (double lambda : densities) {
      for (double t : windows) {
        const auto k = hocsim::rate_coefficient(hocsim::FitParams{a, b, 0.0}, lambda, t);
        os << v << ',' << lambda << ',' << t << ','
           << std::sqrt(hocsim::crlb_variance(v, k)) << '\n';
      }
    }
  }
  if (out_path.empty())
    std::cout << os.str();
  else
    write_file(out_path, os.str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Handover-count Monte Carlo simulator and velocity estimation toolkit"};
  app.set_version_flag("--version", std::string(hocsim::kVersion));
  app.require_subcommand(1);

  auto* sim = app.add_subcommand("simulate", "Run a Monte Carlo campaign from a config file");
  std::string config_path, out_dir;
  int workers = 0;
  bool log_events = false, quiet = false;
  sim->add_option("--config", config_path, "Campaign config file")->required();
  sim->add_option("--out", out_dir, "Output directory")->required();
  sim->add_option("--workers", workers, "Worker threads (0 = config value, else hardware)");
  sim->add_flag("--log-events", log_events, "Write per-trial handover event CSVs");
  sim->add_flag("--quiet", quiet, "Suppress progress output");

  auto* fit = app.add_subcommand("fit", "Fit the power-law rate model to simulated datasets");
  std::string data_dir, fit_out;
  bool refine = false;
  fit->add_option("--data", data_dir, "Dataset directory (with manifest.json)")->required();
  fit->add_option("--out", fit_out, "Fit report path (JSON)")->required();
  fit->add_flag("--refine", refine, "Apply one Gauss-Newton refinement step in linear space");
  fit->add_flag("--quiet", quiet, "Suppress progress output");

  auto* est = app.add_subcommand("estimate", "Estimate velocity from a handover count");
  int hoc = 0;
  double lambda_gbs = 0.0, t_seconds = 0.0;
  double fit_a = kDefaultFitA, fit_b = kDefaultFitB;
  est->add_option("--hoc", hoc, "Observed handover count")->required();
  est->add_option("--lambda-gbs", lambda_gbs, "GBS density per km^2")->required();
  est->add_option("--t-seconds", t_seconds, "Measurement window in seconds")->required();
  est->add_option("--a", fit_a, "Power-law coefficient a");
  est->add_option("--b", fit_b, "Power-law exponent b");

  auto* crlb = app.add_subcommand("crlb", "Tabulate sqrt(CRLB) over a parameter grid");
  std::vector<double> grid_v, grid_lambda, grid_t;
  std::string crlb_out;
  crlb->add_option("--v", grid_v, "Velocities in km/h")->required()->expected(-1);
  crlb->add_option("--lambda-gbs", grid_lambda, "GBS densities per km^2")->required()->expected(-1);
  crlb->add_option("--t-seconds", grid_t, "Windows in seconds")->required()->expected(-1);
  crlb->add_option("--a", fit_a, "Power-law coefficient a");
  crlb->add_option("--b", fit_b, "Power-law exponent b");
  crlb->add_option("--out", crlb_out, "Output CSV path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*sim) return cmd_simulate(config_path, out_dir, workers, log_events, quiet);
    if (*fit) return cmd_fit(data_dir, fit_out, refine, quiet);
    if (*est) return cmd_estimate(hoc, lambda_gbs, t_seconds, fit_a, fit_b);
    if (*crlb) return cmd_crlb(grid_v, grid_lambda, grid_t, fit_a, fit_b, crlb_out);
  } catch (const hocsim::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const hocsim::UnidentifiableFit& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUnidentifiable;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::system_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
