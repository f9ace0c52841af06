// One line per acceptance criterion; exit status 1 if any fails.

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "../oracles.hpp"
#include "pgest/estimators.hpp"
#include "pgest/harness.hpp"
#include "pgest/interference.hpp"
#include "pgest/primary_link.hpp"
#include "pgest/snr_stats.hpp"

using namespace pgest;

namespace {

int failures = 0;

void report(int id, const char* name, bool ok, const std::string& detail) {
  std::printf("%s [%d] %s: %s\n", ok ? "PASS" : "FAIL", id, name, detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

constexpr int kTrials = 10000;

ExperimentSpec base_spec(Scenario s) {
  ExperimentSpec spec;
  spec.scenario = s;
  spec.trials = kTrials;
  spec.master_seed = 2024;
  return spec;
}

double analytic_median(double d0, double d1) {
  PrimaryConfig cfg;
  cfg.geometry = {d0, d1, 0.5};
  return SnrLawParams{cfg.gamma_t_db, cfg.g1_db(), cfg.g0_db()}.location_db();
}

void headline(const CurvePoint& p) {
  const bool ok = p.ml_err_db >= 0.4 && p.ml_err_db <= 0.9 && p.mb_err_db >= 0.5 && p.mb_err_db <= 1.0 &&
                  p.ml_err_db <= p.mb_err_db;
  report(1, "headline errors", ok, fmt("ML %.4f dB in [0.4,0.9], MB %.4f dB in [0.5,1.0], ML<=MB", p.ml_err_db, p.mb_err_db));
}

void average_snr(const std::vector<CurvePoint>& pts) {
  bool ok = true;
  std::string detail;
  for (const CurvePoint& p : pts) {
    const double ref = analytic_median(0.25, p.x);
    const double dev = p.avg_ct_snr_db - ref;
    ok = ok && std::abs(dev) <= 1.5;
    detail += fmt("d1=%.2f %.2f/%.2f ", p.x, p.avg_ct_snr_db, ref);
  }
  report(2, "average measured SNR within 1.5 dB of analytic", ok, detail);
}

void crossover(const std::vector<CurvePoint>& pts) {
  bool ok = true;
  std::string detail;
  for (const CurvePoint& p : pts) {
    const bool high = std::abs(p.x - 0.1) < 1e-9 || std::abs(p.x - 0.2) < 1e-9 || std::abs(p.x - 0.3) < 1e-9;
    const bool far = std::abs(p.x - 0.5) < 1e-9;
    if (!high && !far) continue;
    ok = ok && (high ? p.ml_err_db < p.mb_err_db : p.mb_err_db < p.ml_err_db);
    detail += fmt("d1=%.1f ML %.3f MB %.3f; ", p.x, p.ml_err_db, p.mb_err_db);
  }
  report(3, "crossover ML<MB at d1<=0.3, MB<ML at d1=0.5", ok, detail);
}

void flat_d0() {
  const auto pts = run_experiment(base_spec(Scenario::ErrorVsD0));
  double ml_lo = INFINITY, ml_hi = -INFINITY, mb_lo = INFINITY, mb_hi = -INFINITY;
  for (const CurvePoint& p : pts) {
    ml_lo = std::min(ml_lo, p.ml_err_db);
    ml_hi = std::max(ml_hi, p.ml_err_db);
    mb_lo = std::min(mb_lo, p.mb_err_db);
    mb_hi = std::max(mb_hi, p.mb_err_db);
  }
  const bool ok = ml_hi - ml_lo < 0.3 && mb_hi - mb_lo < 0.3;
  report(4, "flat error over d0", ok, fmt("ML range %.4f dB, MB range %.4f dB (< 0.3)", ml_hi - ml_lo, mb_hi - mb_lo));
}

void consistency() {
  PrimaryConfig cfg;
  const SolverConfig solver = SolverConfig::from_radius(0.5, 0.1);
  const double g0 = cfg.g0_db().value();
  const int trials = 200;
  std::vector<double> mb_mean, ml_mean;
  double mb_median_1e4 = 0.0;
  for (int k : {10, 100, 1000, 10000}) {
    std::vector<double> mb_err, ml_err;
    for (int t = 0; t < trials; ++t) {
      RngStream rng(555, static_cast<std::uint64_t>(t));
      const SnrSampleSet s = simulate_sample_set(cfg, MeasurementConfig::noiseless(), static_cast<std::size_t>(k), rng);
      mb_err.push_back(std::abs(mb_estimate(s, cfg.gamma_t_db, cfg.g1_db()).g0_hat_db.value() - g0));
      ml_err.push_back(std::abs(ml_estimate(s, cfg.gamma_t_db, cfg.g1_db(), solver).g0_hat_db.value() - g0));
    }
    double a = 0.0, b = 0.0;
    for (int t = 0; t < trials; ++t) {
      a += mb_err[t];
      b += ml_err[t];
    }
    mb_mean.push_back(a / trials);
    ml_mean.push_back(b / trials);
    if (k == 10000) mb_median_1e4 = oracle::sorted_median(mb_err);
  }
  bool decreasing = true;
  for (std::size_t i = 1; i < mb_mean.size(); ++i)
    decreasing = decreasing && mb_mean[i] < mb_mean[i - 1] && ml_mean[i] < ml_mean[i - 1];
  const bool ok = mb_median_1e4 < 0.1 && decreasing;
  report(5, "consistency", ok,
         fmt("MB median |err| at K=1e4 %.4f dB (< 0.1); MB mean %.3f %.3f %.3f %.4f; ML mean %.3f %.3f %.3f %.4f",
             mb_median_1e4, mb_mean[0], mb_mean[1], mb_mean[2], mb_mean[3], ml_mean[0], ml_mean[1], ml_mean[2],
             ml_mean[3]));
}

void distribution_law() {
  PrimaryConfig cfg;
  RngStream rng(606, 0);
  const SnrSampleSet s = simulate_sample_set(cfg, MeasurementConfig::noiseless(), 100000, rng);
  const SnrLawParams law{cfg.gamma_t_db, cfg.g1_db(), cfg.g0_db()};
  const std::vector<double> v(s.samples_db().begin(), s.samples_db().end());
  const double d = oracle::ks_distance(v, [&](double x) { return snr_cdf_db(Db(x), law); });
  const double crit = oracle::ks_critical_1pct(v.size());
  const double med = oracle::sorted_median(v);
  const double ref = snr_median_db(law).value();
  const bool ok = d < crit && std::abs(med - ref) <= 0.05;
  report(6, "distribution law", ok, fmt("KS %.5f < %.5f; median %.4f vs %.4f dB", d, crit, med, ref));
}

void solver_correctness() {
  const SolverConfig solver = SolverConfig::from_radius(0.5, 0.1);
  RngStream rng(707, 0);
  PrimaryConfig cfg;
  double worst = 0.0;
  int max_iter = 0;
  int done = 0;
  while (done < 50) {
    cfg.geometry.d0_km = rng.uniform(0.06, 0.45);
    cfg.geometry.d1_km = rng.uniform(0.05, 0.45);
    const auto k = 1 + static_cast<std::size_t>(rng.uniform() * 20.0) % 20;
    const SnrSampleSet s = simulate_sample_set(cfg, MeasurementConfig{}, k, rng);
    const EstimateReport r = ml_estimate(s, cfg.gamma_t_db, cfg.g1_db(), solver);
    if (r.clamped) continue;
    const std::vector<double> v(s.samples_db().begin(), s.samples_db().end());
    const double grid = oracle::grid_argmax_g0(v, cfg.gamma_t_db.value() + cfg.g1_db().value(),
                                               solver.g0_min_db.value(), solver.g0_max_db.value(), 0.01);
    worst = std::max(worst, std::abs(r.g0_hat_db.value() - grid));
    max_iter = std::max(max_iter, r.iterations);
    ++done;
  }
  const EstimateReport single = ml_estimate(SnrSampleSet{24.963}, Db(10.0), Db(-90.4), solver);
  const double single_err = std::abs(single.g0_hat_db.value() - (10.0 - 90.4 - 24.963));
  const bool ok = worst <= solver.tolerance_nu_db + 0.01 && max_iter <= solver.max_iterations() && single_err <= 0.1;
  report(7, "solver correctness", ok,
         fmt("max |ML-grid| %.4f dB (<= 0.11); iterations %d <= %d; K=1 error %.4f dB (<= 0.1)", worst, max_iter,
             solver.max_iterations(), single_err));
}

void complexity() {
  ExperimentSpec spec = base_spec(Scenario::TimingVsK);
  spec.sweep = {100};
  const CurvePoint p = run_experiment(spec).at(0);
  const double ratio = p.ml_time_ns / p.mb_time_ns;
  report(8, "ML time >= 10x MB time at K=100", ratio >= 10.0,
         fmt("ML %.0f ns, MB %.0f ns, ratio %.2f", p.ml_time_ns, p.mb_time_ns, ratio));
}

void imperfect_knowledge(const CurvePoint& baseline) {
  ExperimentSpec spec = base_spec(Scenario::ImperfectVsD1);
  spec.sweep = {0.1};
  spec.knowledge_error = {3.0, 0.0};
  const CurvePoint c1 = run_experiment(spec).at(0);
  spec.knowledge_error = {3.0, 3.0};
  const CurvePoint c2 = run_experiment(spec).at(0);
  auto in = [](double v, double lo, double hi) { return v >= lo && v <= hi; };
  const double ml1 = c1.ml_err_db - baseline.ml_err_db, mb1 = c1.mb_err_db - baseline.mb_err_db;
  const double ml2 = c2.ml_err_db - baseline.ml_err_db, mb2 = c2.mb_err_db - baseline.mb_err_db;
  const bool ok = in(ml1, 0.5, 1.5) && in(mb1, 0.5, 1.5) && in(ml2, 1.0, 2.0) && in(mb2, 1.0, 2.0) &&
                  std::max({c1.ml_err_db, c1.mb_err_db, c2.ml_err_db, c2.mb_err_db}) <= 2.5;
  report(9, "imperfect knowledge", ok,
         fmt("Case I +%.3f/+%.3f dB (0.5-1.5), Case II +%.3f/+%.3f dB (1.0-2.0), totals ML %.3f MB %.3f (<= 2.5)", ml1,
             mb1, ml2, mb2, c2.ml_err_db, c2.mb_err_db));
}

void interference() {
  RngStream rng(808, 0);
  double worst = 0.0;
  int checked = 0;
  while (checked < 1000) {
    ItempParams p;
    p.p_max_dbm = Dbm(rng.uniform(20.0, 46.0));
    p.theta = rng.uniform(0.01, 0.5);
    p.gamma_t_db = Db(rng.uniform(0.0, 20.0));
    p.sigma2_dbm = Dbm(rng.uniform(-120.0, -100.0));
    p.g0_db = Db(rng.uniform(-120.0, -70.0));
    const InterferenceBudget b = interference_temperature(p);
    if (b.clamped) continue;
    worst = std::max(worst, std::abs(outage_probability(p, b.p_i_mw.value()) - p.theta));
    ++checked;
  }

  ItempParams p;
  const double p_i = interference_temperature(p).p_i_mw.value();
  const double closed = outage_probability(p, p_i);
  const double rx = std::pow(10.0, (p.p_max_dbm.value() + p.g0_db.value()) / 10.0);
  const double thresh = std::pow(10.0, p.gamma_t_db.value() / 10.0) * (std::pow(10.0, p.sigma2_dbm.value() / 10.0) + p_i);
  const int n = 1000000;
  int outages = 0;
  for (int i = 0; i < n; ++i) outages += rx * rng.exponential() < thresh;
  const double mc = static_cast<double>(outages) / n;
  const bool ok = worst <= 1e-9 && std::abs(mc - closed) <= 0.002;
  report(10, "interference temperature", ok,
         fmt("round-trip max error %.2e (<= 1e-9); MC outage %.5f vs %.5f (+-0.002)", worst, mc, closed));
}

}  // namespace

int main() {
  // Criteria 1-3 share one d1 sweep; 1 reads its d1 = 0.1 point.
  const auto d1_sweep = run_experiment(base_spec(Scenario::ErrorVsD1));
  headline(d1_sweep.front());
  average_snr(d1_sweep);
  crossover(d1_sweep);
  flat_d0();
  consistency();
  distribution_law();
  solver_correctness();
  complexity();
  imperfect_knowledge(d1_sweep.front());
  interference();
  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
