// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 hocsim contributors
//
// End-to-end acceptance suite. Each criterion prints one [PASS]/[FAIL] line;
// the process exits non-zero if any criterion fails.
//
// The campaign-backed criteria (4, 5, 6, 9) run the full parameter grid
// (v x lambda_GBS at T = 100 s). HOCSIM_ACCEPTANCE_TRIALS overrides the
// per-scenario trial count for smoke runs; the conforming value is 1000.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hocsim/campaign.hpp"
#include "hocsim/estimator.hpp"
#include "hocsim/rng.hpp"
#include "hocsim/statistics.hpp"

#include "../test_support.hpp"

using namespace hocsim;

namespace {

constexpr std::uint64_t kMasterSeed = 0xA3C0FFEEULL;
const FitParams kPaperFit{0.2417, 0.5278, 0.0};

struct Outcome {
  int id;
  std::string name;
  bool pass;
  std::string detail;
};

std::vector<Outcome> g_results;
std::vector<std::string> g_info;

void record(int id, const std::string& name, bool pass, const std::string& detail) {
  g_results.push_back({id, name, pass, detail});
  std::cerr << (pass ? "[PASS] " : "[FAIL] ") << "criterion " << id << ": " << name << " — "
            << detail << "\n";
}

void info(const std::string& line) {
  g_info.push_back(line);
  std::cerr << "[INFO] " << line << "\n";
}

int env_int(const char* name, int fallback) {
  const char* value = std::getenv(name);
  return value ? std::atoi(value) : fallback;
}

std::string fmt(double v, int precision = 6) {
  std::ostringstream os;
  os.precision(precision);
  os << v;
  return os.str();
}

// ---------------------------------------------------------------------------
// Criterion 1: antenna analytics.
void criterion1() {
  const ElementPattern pattern{};
  const ArrayConfig array{};
  bool pass = true;
  std::string detail;

  if (element_gain_db(90.0, 0.0, pattern) != 8.0) {
    pass = false;
    detail += "element boresight != 8 dBi; ";
  }
  const double peak = array_factor_db(96.0, 0.0, array);
  if (std::abs(peak - 10.0 * std::log10(8.0)) > 1e-9) {
    pass = false;
    detail += "AF peak " + fmt(peak) + " off 10log10(8); ";
  }
  std::mt19937_64 rng(1001);
  std::uniform_real_distribution<double> th(0.0, 180.0);
  std::uniform_real_distribution<double> ph(-180.0, 180.0);
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const double theta = th(rng);
    const double phi = ph(rng);
    worst = std::max(worst, std::abs(array_factor_db(theta, phi, array) -
                                     test::brute_force_af_db(theta, phi, array)));
  }
  if (worst > 1e-9) {
    pass = false;
    detail += "closed form vs phasor sum max |diff| = " + fmt(worst) + " dB; ";
  }
  if (pass)
    detail = "boresight 8 dBi exact, AF peak = 10log10(8) +/- 1e-9, max closed-vs-brute diff " +
             fmt(worst) + " dB over 1e4 angles";
  record(1, "antenna analytics", pass, detail);
}

// ---------------------------------------------------------------------------
// Criterion 2: channel analytics.
void criterion2() {
  bool pass = true;
  std::string detail;

  const double pl = path_loss_db(1000.0, 120.0, 1.5);
  if (std::abs(pl - 96.436) > 1e-3) {
    pass = false;
    detail += "path loss " + fmt(pl) + " != 96.436 +/- 1e-3; ";
  }
  const double sigma = sigma_sf_db(120.0);
  if (std::abs(sigma - 2.41835) > 1e-5) {
    pass = false;
    detail += "sigma_sf " + fmt(sigma, 8) + " != 2.41835 +/- 1e-5; ";
  }

  // Lag-m autocovariance against sigma^2 beta^(m d/Xc), estimated over an
  // ensemble of 2e5 independent chains (unbiased, se ~ sigma^2/sqrt(N)).
  const double beta = 0.82, x_c = 100.0, delta = 10.0;
  const int n_chains = 200000;
  double c1 = 0.0, c10 = 0.0, c60 = 0.0;
  for (int s = 0; s < n_chains; ++s) {
    const auto seq =
        correlated_sf_sequence(61, delta, sigma, beta, x_c, make_engine(derive_seed(271828, s)));
    c1 += seq[0] * seq[1];
    c10 += seq[0] * seq[10];
    c60 += seq[0] * seq[60];
  }
  double worst_rel = 0.0;
  for (auto [lag, acc] : {std::pair{1, c1}, std::pair{10, c10}, std::pair{60, c60}}) {
    const double cov = acc / n_chains;
    const double expected = sigma * sigma * std::pow(beta, lag * delta / x_c);
    worst_rel = std::max(worst_rel, std::abs(cov - expected) / expected);
  }
  if (worst_rel > 0.05) {
    pass = false;
    detail += "SF autocorrelation off by " + fmt(worst_rel * 100.0) + "%; ";
  }

  // AR(1) covariance vs the Gudmundson matrix, analytic, n = 50.
  const double rho = sf_step_correlation(delta, beta, x_c);
  double max_diff = 0.0;
  for (int i = 0; i < 50; ++i)
    for (int j = 0; j < 50; ++j)
      max_diff = std::max(max_diff,
                          std::abs(sigma * sigma * std::pow(rho, std::abs(i - j)) -
                                   sigma * sigma * std::pow(beta, std::abs(i - j) * delta / x_c)));
  if (max_diff > 1e-10) {
    pass = false;
    detail += "AR(1) vs Cholesky covariance diff " + fmt(max_diff) + "; ";
  }

  if (pass)
    detail = "PL " + fmt(pl, 8) + ", sigma " + fmt(sigma, 8) + ", autocorr within " +
             fmt(worst_rel * 100.0, 3) + "%, covariance diff " + fmt(max_diff, 3);
  record(2, "channel analytics", pass, detail);
}

// ---------------------------------------------------------------------------
// Criterion 3: CRLB reproduction at the published operating points.
void criterion3() {
  const double sd6 = std::sqrt(crlb_variance(68.0, rate_coefficient(kPaperFit, 6.0, 500.0)));
  const double sd10 = std::sqrt(crlb_variance(68.0, rate_coefficient(kPaperFit, 10.0, 500.0)));
  const bool pass = std::abs(sd6 - 28.05) <= 0.1 && std::abs(sd10 - 24.52) <= 0.1;
  record(3, "CRLB reproduction", pass,
         "sqrt CRLB(68 km/h, T=500s) = " + fmt(sd6, 6) + " (target 28.05 +/- 0.1), " +
             fmt(sd10, 6) + " (target 24.52 +/- 0.1)");
}

// ---------------------------------------------------------------------------
// Campaign-backed criteria.

std::vector<ScenarioConfig> paper_grid(int n_trials, SteerMode mode) {
  std::vector<ScenarioConfig> grid;
  for (double v : {3.0, 30.0, 60.0, 120.0, 160.0}) {
    for (double lambda : {2.0, 4.0, 6.0, 8.0, 10.0}) {
      ScenarioConfig cfg;
      cfg.v_kmh = v;
      cfg.lambda_gbs_per_km2 = lambda;
      cfg.t_window_s = 100.0;
      cfg.n_trials = n_trials;
      cfg.master_seed = kMasterSeed;
      cfg.array.steer_mode = mode;
      grid.push_back(cfg);
    }
  }
  return grid;
}

std::vector<int> first_hocs(const HocDataset& ds, int n) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n && i < static_cast<int>(ds.samples.size()); ++i)
    out.push_back(ds.samples[static_cast<std::size_t>(i)].hoc);
  return out;
}

FitParams fit_grid(const std::vector<HocDataset>& datasets, int n_use, int* dropped = nullptr) {
  std::vector<FitPoint> points;
  int zero_rate = 0;
  for (const auto& ds : datasets) {
    const auto hocs = first_hocs(ds, n_use);
    const double lambda_hat = poisson_mle(hocs);
    if (lambda_hat <= 0.0) {
      ++zero_rate;
      continue;
    }
    points.push_back({ds.config.lambda_gbs_per_km2, ds.config.distance_km(), lambda_hat});
  }
  if (dropped) *dropped = zero_rate;
  return power_fit(points);
}

void campaign_criteria() {
  const int n_trials = env_int("HOCSIM_ACCEPTANCE_TRIALS", 1000);
  const int n_ext = 2 * n_trials;
  const int n_sens = env_int("HOCSIM_ACCEPTANCE_SENS", 200);
  if (n_trials != 1000)
    info("NON-CONFORMING SCALE: HOCSIM_ACCEPTANCE_TRIALS=" + std::to_string(n_trials) +
         " (the stated criteria use 1000)");

  const auto t0 = std::chrono::steady_clock::now();
  auto elapsed = [&t0] {
    return std::chrono::duration_cast<std::chrono::seconds>(std::chrono::steady_clock::now() - t0)
        .count();
  };

  // One run of the grid at 2x trials serves criteria 4, 5 and 6 (the first
  // n_trials samples of each scenario are exactly the n_trials-run samples).
  const auto grid_ext = paper_grid(n_ext, SteerMode::downtilt);
  std::cerr << "running " << grid_ext.size() << " scenarios x " << n_ext << " trials...\n";
  int done = 0;
  const auto datasets = run_campaign(grid_ext, 0, [&](const HocDataset& ds) {
    ++done;
    std::cerr << "  [" << done << "/" << grid_ext.size() << "] v=" << ds.config.v_kmh
              << " lambda=" << ds.config.lambda_gbs_per_km2
              << " mean HOC=" << fmt(poisson_mle(ds.hoc_values()), 4) << " (" << elapsed()
              << " s)\n";
  });

  // Criterion 4: power-fit reproduction plus the steering-mode sensitivity.
  int dropped = 0;
  const FitParams fit = fit_grid(datasets, n_trials, &dropped);
  if (dropped > 0) info("power fit dropped " + std::to_string(dropped) + " zero-rate scenarios");
  {
    const bool pass = fit.a >= 0.18 && fit.a <= 0.30 && fit.b >= 0.42 && fit.b <= 0.63;
    record(4, "power-fit reproduction", pass,
           "a = " + fmt(fit.a, 5) + " (target [0.18, 0.30]), b = " + fmt(fit.b, 5) +
               " (target [0.42, 0.63]), log-residual = " + fmt(fit.residual, 4));
  }

  // Steering-mode sensitivity, reported at reduced trial count.
  {
    const auto zenith_grid = paper_grid(n_sens, SteerMode::zenith);
    const auto zenith_sets = run_campaign(zenith_grid, 0);
    const FitParams fz = fit_grid(zenith_sets, n_sens);
    const FitParams fd = fit_grid(datasets, n_sens);
    info("steer-mode sensitivity (n=" + std::to_string(n_sens) + "/scenario): downtilt a=" +
         fmt(fd.a, 5) + " b=" + fmt(fd.b, 5) + "; zenith a=" + fmt(fz.a, 5) + " b=" +
         fmt(fz.b, 5));
  }

  // Criterion 5: Poisson approximation quality and its improvement with n.
  {
    bool pass = true;
    std::string detail;
    double worst_mse = 0.0;
    double avg_1 = 0.0, avg_2 = 0.0;
    for (const auto& ds : datasets) {
      const auto h1 = first_hocs(ds, n_trials);
      const double l1 = poisson_mle(h1);
      if (l1 <= 0.0) {
        pass = false;
        detail += "zero-rate scenario v=" + fmt(ds.config.v_kmh) + " lambda=" +
                  fmt(ds.config.lambda_gbs_per_km2) + "; ";
        continue;
      }
      const double mse1 = pmf_mse(empirical_pmf(h1), l1);
      worst_mse = std::max(worst_mse, mse1);
      avg_1 += mse1;
      const auto h2 = ds.hoc_values();
      avg_2 += pmf_mse(empirical_pmf(h2), poisson_mle(h2));
    }
    avg_1 /= static_cast<double>(datasets.size());
    avg_2 /= static_cast<double>(datasets.size());
    if (worst_mse > 5e-3) {
      pass = false;
      detail += "worst per-scenario MSE " + fmt(worst_mse, 4) + " > 5e-3; ";
    }
    if (!(avg_2 < avg_1)) {
      pass = false;
      detail += "grid-average MSE did not decrease when doubling trials (" + fmt(avg_1, 4) +
                " -> " + fmt(avg_2, 4) + "); ";
    }
    if (pass)
      detail = "worst per-scenario MSE " + fmt(worst_mse, 4) + " <= 5e-3; grid average " +
               fmt(avg_1, 4) + " -> " + fmt(avg_2, 4) + " at 2x trials";
    record(5, "Poisson-fit quality", pass, detail);
  }

  // Criterion 6: estimator self-consistency with our own fitted (a, b).
  {
    bool pass = true;
    double worst_bias = 0.0, lo_ratio = 1.0, hi_ratio = 1.0;
    std::string detail;
    for (const auto& ds : datasets) {
      if (ds.config.v_kmh < 30.0 || ds.config.lambda_gbs_per_km2 < 4.0) continue;
      const auto hocs = first_hocs(ds, n_trials);
      const auto k = rate_coefficient(fit, ds.config.lambda_gbs_per_km2, ds.config.t_window_s);
      const auto report = evaluate(hocs, ds.config.v_kmh, k);
      const double bias = std::abs(report.mean_vhat_kmh - ds.config.v_kmh) / ds.config.v_kmh;
      const double ratio = report.var_vhat / report.crlb;
      worst_bias = std::max(worst_bias, bias);
      lo_ratio = std::min(lo_ratio, ratio);
      hi_ratio = std::max(hi_ratio, ratio);
      if (bias > 0.10)
        detail += "bias " + fmt(bias * 100.0, 3) + "% at v=" + fmt(ds.config.v_kmh) +
                  " lambda=" + fmt(ds.config.lambda_gbs_per_km2) + "; ";
      if (ratio < 0.7 || ratio > 1.4)
        detail += "var ratio " + fmt(ratio, 3) + " at v=" + fmt(ds.config.v_kmh) + " lambda=" +
                  fmt(ds.config.lambda_gbs_per_km2) + "; ";
      pass = pass && bias <= 0.10 && ratio >= 0.7 && ratio <= 1.4;
    }
    if (pass)
      detail = "worst |bias| " + fmt(worst_bias * 100.0, 3) + "% <= 10%, var/CRLB in [" +
               fmt(lo_ratio, 3) + ", " + fmt(hi_ratio, 3) + "] within [0.7, 1.4]";
    record(6, "estimator self-consistency", pass, detail);
  }

  // Criterion 9: byte-identical datasets across worker counts (the baseline
  // grid ran with the hardware worker count; the rerun uses 3 workers and
  // the plain n_trials count).
  {
    const auto rerun_grid = paper_grid(n_trials, SteerMode::downtilt);
    const auto rerun = run_campaign(rerun_grid, 3);
    bool pass = true;
    for (std::size_t i = 0; i < datasets.size(); ++i) {
      HocDataset sliced;
      sliced.config = rerun[i].config;
      sliced.samples.assign(datasets[i].samples.begin(),
                            datasets[i].samples.begin() + n_trials);
      if (dataset_csv(sliced) != dataset_csv(rerun[i])) {
        pass = false;
        break;
      }
    }
    record(9, "campaign determinism", pass,
           pass ? "all " + std::to_string(datasets.size()) +
                      " dataset CSVs byte-identical across worker counts"
                : "dataset CSVs differ across worker counts");
  }
}

// ---------------------------------------------------------------------------
// Criterion 7: model-level efficiency of vhat = h/K.
void criterion7() {
  const double v = 68.0;
  const auto k = rate_coefficient(kPaperFit, 6.0, 500.0);
  const double lambda = k.k * v;
  const int n = 100000;
  std::mt19937_64 rng(987654321);
  std::poisson_distribution<int> pois(lambda);
  std::vector<int> hocs;
  hocs.reserve(n);
  for (int i = 0; i < n; ++i) hocs.push_back(pois(rng));
  const auto report = evaluate(hocs, v, k);
  const double se = std::sqrt(report.crlb / n);
  const double ratio = report.var_vhat / report.crlb;
  const bool pass = std::abs(report.mean_vhat_kmh - v) < 3.0 * se && ratio > 0.97 && ratio < 1.03;
  record(7, "model-level efficiency", pass,
         "mean vhat = " + fmt(report.mean_vhat_kmh, 6) + " (v = 68, 3se = " + fmt(3.0 * se, 4) +
             "), var/CRLB = " + fmt(ratio, 5) + " (target [0.97, 1.03])");
}

// ---------------------------------------------------------------------------
// Criterion 8: regularity condition and CRLB monotonicity.
void criterion8() {
  std::mt19937_64 rng(777);
  std::uniform_real_distribution<double> uv(1.0, 200.0);
  std::uniform_real_distribution<double> ul(0.5, 20.0);
  std::uniform_real_distribution<double> ut(10.0, 2000.0);

  bool pass = true;
  std::string detail;
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const double v = uv(rng);
    const auto k = rate_coefficient(kPaperFit, ul(rng), ut(rng));
    const double lambda = k.k * v;
    const int truncation = static_cast<int>(lambda + 15.0 * std::sqrt(lambda) + 50.0);
    const double residual = std::abs(regularity_residual(v, k, truncation));
    worst = std::max(worst, residual);
  }
  if (worst > 1e-10) {
    pass = false;
    detail += "worst regularity residual " + fmt(worst) + "; ";
  }

  int violations = 0;
  for (int i = 0; i < 100; ++i) {
    const double v = uv(rng);
    const double lambda = ul(rng);
    const double t = ut(rng);
    const double base = crlb_variance(v, rate_coefficient(kPaperFit, lambda, t));
    if (!(crlb_variance(v * 1.05, rate_coefficient(kPaperFit, lambda, t)) > base)) ++violations;
    if (!(crlb_variance(v, rate_coefficient(kPaperFit, lambda, t * 1.05)) < base)) ++violations;
    if (!(crlb_variance(v, rate_coefficient(kPaperFit, lambda * 1.05, t)) < base)) ++violations;
  }
  if (violations > 0) {
    pass = false;
    detail += std::to_string(violations) + " monotonicity violations; ";
  }
  if (pass)
    detail = "worst regularity residual " + fmt(worst, 3) +
             " < 1e-10 over 20 triples; CRLB strictly monotone on 100 triples";
  record(8, "regularity and monotonicity", pass, detail);
}

}  // namespace

int main() {
  const auto t_start = std::chrono::steady_clock::now();
  criterion1();
  criterion2();
  criterion3();
  campaign_criteria();  // criteria 4, 5, 6 and 9
  criterion7();
  criterion8();

  std::sort(g_results.begin(), g_results.end(),
            [](const Outcome& a, const Outcome& b) { return a.id < b.id; });

  const auto seconds =
      std::chrono::duration_cast<std::chrono::seconds>(std::chrono::steady_clock::now() - t_start)
          .count();
  std::cout << "\n=== acceptance summary (" << seconds << " s) ===\n";
  int failures = 0;
  for (const auto& r : g_results) {
    std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << "criterion " << r.id << ": " << r.name
              << " — " << r.detail << "\n";
    if (!r.pass) ++failures;
  }
  for (const auto& line : g_info) std::cout << "[INFO] " << line << "\n";
  std::cout << (failures == 0 ? "ALL CRITERIA PASSED\n"
                              : std::to_string(failures) + " CRITERIA FAILED\n");
  return failures == 0 ? 0 : 1;
}
