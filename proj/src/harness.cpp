#include "pgest/harness.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <thread>

#include "pgest/estimators.hpp"
#include "pgest/interference.hpp"
#include "pgest/primary_link.hpp"

namespace pgest {

namespace {

struct ScenarioName {
  Scenario scenario;
  std::string_view name;
};

constexpr std::array<ScenarioName, 9> kScenarioNames{{
    {Scenario::ErrorVsD1, "error_vs_d1"},
    {Scenario::SnrVsD1, "snr_vs_d1"},
    {Scenario::ErrorVsD0, "error_vs_d0"},
    {Scenario::SnrVsD0, "snr_vs_d0"},
    {Scenario::ErrorVsK, "error_vs_k"},
    {Scenario::TimingVsK, "timing_vs_k"},
    {Scenario::ImperfectVsD1, "imperfect_vs_d1"},
    {Scenario::ImperfectVsK, "imperfect_vs_k"},
    {Scenario::ItempReport, "itemp_report"},
}};

constexpr int kTimingWarmupCalls = 100;

}  // namespace

std::string_view to_string(Scenario s) noexcept {
  for (const auto& e : kScenarioNames)
    if (e.scenario == s) return e.name;
  return "unknown";
}

std::optional<Scenario> parse_scenario(std::string_view name) noexcept {
  for (const auto& e : kScenarioNames)
    if (e.name == name) return e.scenario;
  return std::nullopt;
}

SweepAxis sweep_axis(Scenario s) noexcept {
  switch (s) {
    case Scenario::ErrorVsD1:
    case Scenario::SnrVsD1:
    case Scenario::ImperfectVsD1:
      return SweepAxis::D1;
    case Scenario::ErrorVsD0:
    case Scenario::SnrVsD0:
    case Scenario::ItempReport:
      return SweepAxis::D0;
    case Scenario::ErrorVsK:
    case Scenario::TimingVsK:
    case Scenario::ImperfectVsK:
      return SweepAxis::K;
  }
  return SweepAxis::D1;
}

std::vector<double> default_distance_grid() {
  std::vector<double> grid;
  for (int i = 0; i <= 8; ++i) grid.push_back(0.10 + 0.05 * i);
  return grid;
}

std::vector<double> default_k_grid() { return {10, 20, 50, 100, 200, 500, 1000}; }

std::vector<double> ExperimentSpec::effective_sweep() const {
  if (!sweep.empty()) return sweep;
  return sweep_axis(scenario) == SweepAxis::K ? default_k_grid() : default_distance_grid();
}

KnowledgeError ExperimentSpec::effective_knowledge_error() const {
  const bool imperfect = scenario == Scenario::ImperfectVsD1 || scenario == Scenario::ImperfectVsK;
  if (imperfect && knowledge_error.perfect()) return {3.0, 3.0};
  return knowledge_error;
}

bool ExperimentSpec::timing_enabled() const { return measure_timing.value_or(scenario == Scenario::TimingVsK); }

void ExperimentSpec::validate() const {
  if (trials < 1) throw Error(ErrorCode::InvalidConfig, "trials must be >= 1");
  if (k_blocks < 1) throw Error(ErrorCode::InvalidConfig, "K must be >= 1");
  if (j_samples < 1) throw Error(ErrorCode::InvalidConfig, "J must be >= 1");
  if (threads < 0) throw Error(ErrorCode::InvalidConfig, "threads must be >= 0");
  if (!(nu_db > 0.0)) throw Error(ErrorCode::InvalidConfig, "nu must be > 0");
  if (knowledge_error.gamma_t_bound_db < 0.0 || knowledge_error.g1_bound_db < 0.0)
    throw Error(ErrorCode::InvalidConfig, "knowledge error bounds must be >= 0");
  if (scenario == Scenario::ItempReport && !(theta > 0.0 && theta < 1.0))
    throw Error(ErrorCode::InvalidTheta, "theta must lie in (0, 1)");
  const auto grid = effective_sweep();
  if (grid.empty()) throw Error(ErrorCode::InvalidConfig, "sweep must be non-empty");
  if (sweep_axis(scenario) == SweepAxis::K) {
    for (double k : grid)
      if (!(k >= 1.0) || k != std::floor(k)) throw Error(ErrorCode::InvalidConfig, "K sweep values must be integers >= 1");
  }
  // Geometry for every sweep point is checked when the point is built.
}

double estimation_error_db(Db g0_hat, Db g0_true) { return std::abs(g0_hat.value() - g0_true.value()); }

namespace {

struct PointSetup {
  PrimaryConfig primary;
  MeasurementConfig meas;
  SolverConfig solver;
  std::size_t k_blocks = 0;
};

PointSetup setup_point(const ExperimentSpec& spec, double x) {
  PointSetup s;
  s.primary.gamma_t_db = spec.gamma_t_db;
  s.primary.sigma2_dbm = spec.sigma2_dbm;
  s.primary.p_max_dbm = spec.p_max_dbm;
  s.primary.geometry = {spec.d0_km, spec.d1_km, spec.radius_km};
  s.k_blocks = static_cast<std::size_t>(spec.k_blocks);
  switch (sweep_axis(spec.scenario)) {
    case SweepAxis::D1: s.primary.geometry.d1_km = x; break;
    case SweepAxis::D0: s.primary.geometry.d0_km = x; break;
    case SweepAxis::K: s.k_blocks = static_cast<std::size_t>(x); break;
  }
  s.primary.validate();
  s.meas.j_samples = spec.j_samples;
  s.meas.exact = spec.noiseless;
  s.solver = SolverConfig::from_radius(spec.radius_km, spec.nu_db, s.primary.path_loss);
  return s;
}

struct TrialResult {
  double ml_err = 0.0;
  double mb_err = 0.0;
  double avg_snr = 0.0;
  std::int64_t ml_ns = 0;
  std::int64_t mb_ns = 0;
  bool clamped = false;
  Db ml_hat;
  Db mb_hat;
};

// What the CT believes about gamma_T and g1 in one trial. The two uniforms
// are always drawn so the fading that follows is the same with and without
// knowledge errors.
struct Knowledge {
  Db gamma_t;
  Db g1;
};

Knowledge draw_knowledge(const PrimaryConfig& cfg, const KnowledgeError& err, RngStream& rng) {
  const double u_gt = rng.uniform(-1.0, 1.0);
  const double u_g1 = rng.uniform(-1.0, 1.0);
  return {cfg.gamma_t_db + Db(u_gt * err.gamma_t_bound_db), cfg.g1_db() + Db(u_g1 * err.g1_bound_db)};
}

TrialResult run_trial(const ExperimentSpec& spec, const PointSetup& setup, const KnowledgeError& err,
                      std::uint64_t trial) {
  RngStream rng(spec.master_seed, trial);
  const Knowledge know = draw_knowledge(setup.primary, err, rng);
  const SnrSampleSet samples = simulate_sample_set(setup.primary, setup.meas, setup.k_blocks, rng);
  const Db g0 = setup.primary.g0_db();

  const EstimateReport ml = ml_estimate(samples, know.gamma_t, know.g1, setup.solver);
  const EstimateReport mb = mb_estimate(samples, know.gamma_t, know.g1);

  TrialResult r;
  r.ml_err = estimation_error_db(ml.g0_hat_db, g0);
  r.mb_err = estimation_error_db(mb.g0_hat_db, g0);
  r.avg_snr = samples.mean_db();
  r.ml_ns = ml.elapsed_ns;
  r.mb_ns = mb.elapsed_ns;
  r.clamped = ml.clamped;
  r.ml_hat = ml.g0_hat_db;
  r.mb_hat = mb.g0_hat_db;
  return r;
}

void warm_up(const ExperimentSpec& spec, const PointSetup& setup) {
  RngStream rng(spec.master_seed, 0);
  const SnrSampleSet samples = simulate_sample_set(setup.primary, setup.meas, setup.k_blocks, rng);
  const Db gt = setup.primary.gamma_t_db;
  const Db g1 = setup.primary.g1_db();
  double sink = 0.0;
  for (int i = 0; i < kTimingWarmupCalls; ++i) {
    sink += ml_estimate(samples, gt, g1, setup.solver).g0_hat_db.value();
    sink += mb_estimate(samples, gt, g1).g0_hat_db.value();
  }
  volatile double keep = sink;
  (void)keep;
}

int thread_count(const ExperimentSpec& spec) {
  if (spec.threads > 0) return spec.threads;
  // Concurrent trials perturb each other's wall-clock samples.
  if (spec.timing_enabled()) return 1;
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<TrialResult> run_trials(const ExperimentSpec& spec, const PointSetup& setup) {
  const KnowledgeError err = spec.effective_knowledge_error();
  const auto n = static_cast<std::size_t>(spec.trials);
  std::vector<TrialResult> results(n);
  const auto workers = static_cast<std::size_t>(std::min<int>(thread_count(spec), spec.trials));
  if (workers <= 1) {
    for (std::size_t t = 0; t < n; ++t) results[t] = run_trial(spec, setup, err, t);
    return results;
  }
  // Strided assignment; each slot is written by exactly one worker.
  std::vector<std::exception_ptr> failures(workers);
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t t = w; t < n; t += workers) results[t] = run_trial(spec, setup, err, t);
        } catch (...) {
          failures[w] = std::current_exception();
        }
      });
    }
  }
  for (const auto& f : failures)
    if (f) std::rethrow_exception(f);
  return results;
}

}  // namespace

std::vector<CurvePoint> run_experiment(const ExperimentSpec& spec) {
  spec.validate();
  const bool timing = spec.timing_enabled();
  std::vector<CurvePoint> points;
  for (double x : spec.effective_sweep()) {
    const PointSetup setup = setup_point(spec, x);
    if (timing) warm_up(spec, setup);
    const std::vector<TrialResult> results = run_trials(spec, setup);

    CurvePoint p;
    p.x = x;
    double ml_ns = 0.0;
    double mb_ns = 0.0;
    for (const TrialResult& r : results) {
      p.ml_err_db += r.ml_err;
      p.mb_err_db += r.mb_err;
      p.avg_ct_snr_db += r.avg_snr;
      ml_ns += static_cast<double>(r.ml_ns);
      mb_ns += static_cast<double>(r.mb_ns);
      p.clamp_count += r.clamped ? 1 : 0;
    }
    const double n = static_cast<double>(results.size());
    p.ml_err_db /= n;
    p.mb_err_db /= n;
    p.avg_ct_snr_db /= n;
    p.ml_time_ns = timing ? ml_ns / n : 0.0;
    p.mb_time_ns = timing ? mb_ns / n : 0.0;
    points.push_back(p);
  }
  return points;
}

std::vector<ItempPoint> run_itemp_report(const ExperimentSpec& spec) {
  ExperimentSpec s = spec;
  s.scenario = Scenario::ItempReport;
  s.validate();
  std::vector<ItempPoint> points;
  for (double x : s.effective_sweep()) {
    const PointSetup setup = setup_point(s, x);
    const std::vector<TrialResult> results = run_trials(s, setup);

    ItempParams truth{s.p_max_dbm, s.theta, s.gamma_t_db, s.sigma2_dbm, setup.primary.g0_db()};
    ItempPoint p;
    p.x = x;
    p.g0_db = truth.g0_db.value();
    p.itemp_true_mw = interference_temperature(truth).p_i_mw.value();
    for (const TrialResult& r : results) {
      ItempParams ml = truth;
      ml.g0_db = r.ml_hat;
      ItempParams mb = truth;
      mb.g0_db = r.mb_hat;
      const InterferenceBudget b_ml = interference_temperature(ml);
      const InterferenceBudget b_mb = interference_temperature(mb);
      p.itemp_ml_mw += b_ml.p_i_mw.value();
      p.itemp_mb_mw += b_mb.p_i_mw.value();
      p.outage_ml += outage_probability(truth, b_ml.p_i_mw.value());
      p.outage_mb += outage_probability(truth, b_mb.p_i_mw.value());
      p.clamp_count += r.clamped ? 1 : 0;
    }
    const double n = static_cast<double>(results.size());
    p.itemp_ml_mw /= n;
    p.itemp_mb_mw /= n;
    p.outage_ml /= n;
    p.outage_mb /= n;
    points.push_back(p);
  }
  return points;
}

}  // namespace pgest
