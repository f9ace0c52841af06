// Command-line front end: Monte Carlo sweeps, one-shot estimation from a
// samples file, and interference-temperature evaluation.

#include <cmath>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "pgest/channel_model.hpp"
#include "pgest/csv.hpp"
#include "pgest/estimators.hpp"
#include "pgest/harness.hpp"
#include "pgest/interference.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitBadArgs = 2;
constexpr int kExitIo = 3;

struct SweepArgs {
  std::string scenario;
  std::string out;
  int trials = 10000;
  std::uint64_t seed = 1;
  double d0 = 0.25;
  double d1 = 0.1;
  int k = 100;
  int j = 100;
  double gamma_t = 10.0;
  double sigma2 = -114.0;
  double radius = 0.5;
  double nu = 0.1;
  double gt_err = 0.0;
  double g1_err = 0.0;
  double pmax = 43.0;
  double theta = 0.1;
  int threads = 0;
  bool noiseless = false;
  bool timing = false;
};

struct EstimateArgs {
  std::string input;
  std::string method;
  double gamma_t = 10.0;
  double g1 = 0.0;
  double nu = 0.1;
  double radius = 0.5;
};

struct ItempArgs {
  double g0 = 0.0;
  double pmax = 43.0;
  double theta = 0.1;
  double gamma_t = 10.0;
  double sigma2 = -114.0;
};

int run_sweep(const SweepArgs& a) {
  const auto scenario = pgest::parse_scenario(a.scenario);
  if (!scenario) {
    std::cerr << "unknown scenario '" << a.scenario << "'\n";
    return kExitBadArgs;
  }
  pgest::ExperimentSpec spec;
  spec.scenario = *scenario;
  spec.trials = a.trials;
  spec.master_seed = a.seed;
  spec.d0_km = a.d0;
  spec.d1_km = a.d1;
  spec.k_blocks = a.k;
  spec.j_samples = a.j;
  spec.gamma_t_db = pgest::Db(a.gamma_t);
  spec.sigma2_dbm = pgest::Dbm(a.sigma2);
  spec.radius_km = a.radius;
  spec.nu_db = a.nu;
  spec.knowledge_error = {a.gt_err, a.g1_err};
  spec.p_max_dbm = pgest::Dbm(a.pmax);
  spec.theta = a.theta;
  spec.threads = a.threads;
  spec.noiseless = a.noiseless;
  if (a.timing) spec.measure_timing = true;

  if (spec.scenario == pgest::Scenario::ItempReport) {
    pgest::write_itemp_csv(pgest::run_itemp_report(spec), a.out);
  } else {
    pgest::write_curve_csv(pgest::run_experiment(spec), a.out);
  }
  return kExitOk;
}

int run_estimate(const EstimateArgs& a) {
  const pgest::SnrSampleSet samples = pgest::read_samples_csv(a.input);
  const pgest::Db gt(a.gamma_t);
  const pgest::Db g1(a.g1);
  pgest::EstimateReport r;
  if (a.method == "ml") {
    r = pgest::ml_estimate(samples, gt, g1, pgest::SolverConfig::from_radius(a.radius, a.nu));
  } else {
    r = pgest::mb_estimate(samples, gt, g1);
  }
  nlohmann::json out = {
      {"method", a.method},
      {"k", samples.k_count()},
      {"g0_hat_db", r.g0_hat_db.value()},
      {"iterations", r.iterations},
      {"residual_score", r.residual_score},
      {"clamped", r.clamped},
      {"elapsed_ns", r.elapsed_ns},
  };
  std::cout << out.dump() << '\n';
  return kExitOk;
}

int run_itemp(const ItempArgs& a) {
  pgest::ItempParams p{pgest::Dbm(a.pmax), a.theta, pgest::Db(a.gamma_t), pgest::Dbm(a.sigma2), pgest::Db(a.g0)};
  const pgest::InterferenceBudget b = pgest::interference_temperature(p);
  nlohmann::json out = {
      {"itemp_mw", b.p_i_mw.value()},
      {"unclamped_mw", b.unclamped_mw},
      {"clamped", b.clamped},
      {"outage_at_itemp", pgest::outage_probability(p, b.p_i_mw.value())},
  };
  out["itemp_dbm"] = b.p_i_mw.value() > 0.0 ? nlohmann::json(pgest::mw_to_dbm(b.p_i_mw).value()) : nlohmann::json();
  std::cout << out.dump() << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Primary channel gain estimation toolkit"};
  app.require_subcommand(1);

  SweepArgs sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Run a Monte Carlo sweep and write a CSV curve");
  sweep_cmd->add_option("--scenario", sweep.scenario, "Scenario name")->required();
  sweep_cmd->add_option("--trials", sweep.trials, "Trials per sweep point")->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--seed", sweep.seed, "Master seed");
  sweep_cmd->add_option("--out", sweep.out, "Output CSV path")->required();
  sweep_cmd->add_option("--d0", sweep.d0, "PT-PR distance (km)");
  sweep_cmd->add_option("--d1", sweep.d1, "PT-CT distance (km)");
  sweep_cmd->add_option("--k", sweep.k, "Measured SNRs per estimate")->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--j", sweep.j, "Signal samples per SNR measurement")->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--gamma-t", sweep.gamma_t, "Target SNR at the PR (dB)");
  sweep_cmd->add_option("--sigma2", sweep.sigma2, "Noise power (dBm)");
  sweep_cmd->add_option("--radius", sweep.radius, "PT coverage radius (km)");
  sweep_cmd->add_option("--nu", sweep.nu, "Bisection tolerance (dB)");
  sweep_cmd->add_option("--gt-err", sweep.gt_err, "Half-width of uniform gamma_T error (dB)");
  sweep_cmd->add_option("--g1-err", sweep.g1_err, "Half-width of uniform g1 error (dB)");
  sweep_cmd->add_option("--pmax", sweep.pmax, "PT maximum power (dBm, itemp_report)");
  sweep_cmd->add_option("--theta", sweep.theta, "Outage target (itemp_report)");
  sweep_cmd->add_option("--threads", sweep.threads, "Worker threads (0 = all cores)");
  sweep_cmd->add_flag("--noiseless", sweep.noiseless, "Use exact SNRs instead of the energy detector");
  sweep_cmd->add_flag("--timing", sweep.timing, "Record estimator wall time for any scenario");

  EstimateArgs est;
  auto* est_cmd = app.add_subcommand("estimate", "Estimate g0 from a samples CSV");
  est_cmd->add_option("--input", est.input, "samples.csv with header gamma_c_db")->required();
  est_cmd->add_option("--method", est.method, "ml or mb")->required()->check(CLI::IsMember({"ml", "mb"}));
  est_cmd->add_option("--gamma-t", est.gamma_t, "Target SNR at the PR (dB)")->required();
  est_cmd->add_option("--g1", est.g1, "PT-CT large-scale gain (dB)")->required();
  est_cmd->add_option("--nu", est.nu, "Bisection tolerance (dB)");
  est_cmd->add_option("--radius", est.radius, "PT coverage radius for the ML bounds (km)");

  ItempArgs it;
  auto* it_cmd = app.add_subcommand("itemp", "Interference temperature from a primary channel gain");
  it_cmd->add_option("--g0", it.g0, "Primary channel gain (dB)")->required();
  it_cmd->add_option("--pmax", it.pmax, "PT maximum power (dBm)")->required();
  it_cmd->add_option("--theta", it.theta, "Outage target in (0, 1)")->required();
  it_cmd->add_option("--gamma-t", it.gamma_t, "Target SNR at the PR (dB)")->required();
  it_cmd->add_option("--sigma2", it.sigma2, "Noise power (dBm)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadArgs;
  }

  try {
    if (*sweep_cmd) return run_sweep(sweep);
    if (*est_cmd) return run_estimate(est);
    if (*it_cmd) return run_itemp(it);
  } catch (const pgest::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == pgest::ErrorCode::IoError ? kExitIo : kExitBadArgs;
  }
  return kExitBadArgs;
}
