#include "pgest/estimators.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <vector>

#include "pgest/snr_stats.hpp"

namespace pgest {

std::string_view to_string(Method m) noexcept { return m == Method::ML ? "ML" : "MB"; }

void SolverConfig::validate() const {
  if (!(g0_min_db < g0_max_db)) throw Error(ErrorCode::InvalidConfig, "solver needs g0_min < g0_max");
  if (!(tolerance_nu_db > 0.0) || !std::isfinite(tolerance_nu_db))
    throw Error(ErrorCode::InvalidConfig, "solver tolerance nu must be > 0");
}

SolverConfig SolverConfig::from_radius(double radius_km, double nu_db, const PathLossModel& model) {
  const GainBounds b = gain_bounds_db(model, radius_km);
  SolverConfig cfg{b.g_min, b.g_max, nu_db};
  cfg.validate();
  return cfg;
}

int SolverConfig::max_iterations() const {
  const double ratio = (g0_max_db.value() - g0_min_db.value()) / tolerance_nu_db;
  if (ratio <= 1.0) return 0;
  return static_cast<int>(std::ceil(std::log2(ratio)));
}

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t nanos_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start).count();
}

// Median from the two central order statistics via selection; equal to the
// median of the fully sorted samples.
double select_median(std::vector<double>& s) {
  const std::size_t k = s.size();
  const auto upper = s.begin() + static_cast<std::ptrdiff_t>(k / 2);
  std::nth_element(s.begin(), upper, s.end());
  if (k % 2 == 1) return *upper;
  return 0.5 * (*std::max_element(s.begin(), upper) + *upper);
}

}  // namespace

EstimateReport ml_estimate(const SnrSampleSet& samples, Db gamma_t_db, Db g1_db, const SolverConfig& solver) {
  const auto start = Clock::now();
  solver.validate();

  const std::span<const double> s = samples.samples_db();
  const double offset = gamma_t_db.value() + g1_db.value();
  auto f1 = [&](double g0) { return score_f1_raw(s, offset, g0); };

  double lo = solver.g0_min_db.value();
  double hi = solver.g0_max_db.value();
  double f_lo = f1(lo);
  const double f_hi = f1(hi);

  EstimateReport report;
  report.method = Method::ML;

  if ((f_lo > 0.0 && f_hi > 0.0) || (f_lo < 0.0 && f_hi < 0.0)) {
    // Score still positive at g0_max: the likelihood keeps rising past the
    // near-distance bound, and symmetrically at g0_min.
    const double bound = f_hi > 0.0 ? hi : lo;
    report.g0_hat_db = Db(bound);
    report.residual_score = f_hi > 0.0 ? f_hi : f_lo;
    report.clamped = true;
    report.elapsed_ns = nanos_since(start);
    return report;
  }

  double mid = 0.5 * (lo + hi);
  int iterations = 0;
  while (std::abs(hi - lo) > solver.tolerance_nu_db) {
    mid = 0.5 * (hi + lo);
    const double f_mid = f1(mid);
    if (f_mid * f_lo > 0.0) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
    ++iterations;
  }

  report.g0_hat_db = Db(mid);
  report.iterations = iterations;
  report.residual_score = f1(mid);
  report.elapsed_ns = nanos_since(start);
  return report;
}

Db sample_median_db(const SnrSampleSet& samples) {
  const std::span<const double> s = samples.samples_db();
  std::vector<double> scratch(s.begin(), s.end());
  return Db(select_median(scratch));
}

EstimateReport mb_estimate(const SnrSampleSet& samples, Db gamma_t_db, Db g1_db) {
  const auto start = Clock::now();
  const Db median = sample_median_db(samples);
  EstimateReport report;
  report.method = Method::MB;
  report.g0_hat_db = gamma_t_db + g1_db - median;
  report.elapsed_ns = nanos_since(start);
  return report;
}

}  // namespace pgest
