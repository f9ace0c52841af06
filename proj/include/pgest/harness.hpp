#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "pgest/units.hpp"

namespace pgest {

enum class Scenario {
  ErrorVsD1,
  SnrVsD1,
  ErrorVsD0,
  SnrVsD0,
  ErrorVsK,
  TimingVsK,
  ImperfectVsD1,
  ImperfectVsK,
  ItempReport,
};

enum class SweepAxis { D1, D0, K };

std::string_view to_string(Scenario s) noexcept;
std::optional<Scenario> parse_scenario(std::string_view name) noexcept;
SweepAxis sweep_axis(Scenario s) noexcept;

/// Half-widths of the uniform errors added to the CT's knowledge of
/// gamma_T and g1 (dB). Zero means perfect knowledge.
struct KnowledgeError {
  double gamma_t_bound_db = 0.0;
  double g1_bound_db = 0.0;

  bool perfect() const noexcept { return gamma_t_bound_db == 0.0 && g1_bound_db == 0.0; }
};

struct ExperimentSpec {
  Scenario scenario = Scenario::ErrorVsD1;
  std::vector<double> sweep;  // empty: default grid for the scenario's axis
  int trials = 10000;
  int k_blocks = 100;
  int j_samples = 100;
  std::uint64_t master_seed = 1;
  KnowledgeError knowledge_error{};

  double d0_km = 0.25;
  double d1_km = 0.1;
  double radius_km = 0.5;
  Db gamma_t_db{10.0};
  Dbm sigma2_dbm{-114.0};
  double nu_db = 0.1;
  bool noiseless = false;

  // Wall-clock timing makes output run-dependent; by default it is only
  // collected for timing_vs_k, otherwise the time columns are written as 0.
  std::optional<bool> measure_timing;
  int threads = 0;  // 0: std::thread::hardware_concurrency()

  // itemp_report only.
  Dbm p_max_dbm{43.0};
  double theta = 0.1;

  void validate() const;
  std::vector<double> effective_sweep() const;
  KnowledgeError effective_knowledge_error() const;
  bool timing_enabled() const;
};

struct CurvePoint {
  double x = 0.0;
  double ml_err_db = 0.0;
  double mb_err_db = 0.0;
  double avg_ct_snr_db = 0.0;
  double ml_time_ns = 0.0;
  double mb_time_ns = 0.0;
  std::int64_t clamp_count = 0;
};

struct ItempPoint {
  double x = 0.0;
  double g0_db = 0.0;
  double itemp_true_mw = 0.0;
  double itemp_ml_mw = 0.0;   // mean over trials
  double itemp_mb_mw = 0.0;
  double outage_ml = 0.0;     // mean true outage when the CT uses the ML budget
  double outage_mb = 0.0;
  std::int64_t clamp_count = 0;
};

std::vector<double> default_distance_grid();
std::vector<double> default_k_grid();

/// |g0_hat - g0| in dB.
double estimation_error_db(Db g0_hat, Db g0_true);

/// Runs `trials` independent trials per sweep value. Trial t draws from
/// RngStream(master_seed, t) at every sweep value, so neighbouring points
/// share fading realisations. Output is independent of the thread count.
std::vector<CurvePoint> run_experiment(const ExperimentSpec& spec);

/// d0 sweep reporting interference budgets derived from the estimates.
std::vector<ItempPoint> run_itemp_report(const ExperimentSpec& spec);

}  // namespace pgest
