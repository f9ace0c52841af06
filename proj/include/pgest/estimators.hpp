#pragma once

#include <cstdint>
#include <string_view>

#include "pgest/channel_model.hpp"
#include "pgest/sample_set.hpp"
#include "pgest/units.hpp"

namespace pgest {

/// Search interval for the ML root and the bisection stopping width nu.
struct SolverConfig {
  Db g0_min_db;
  Db g0_max_db;
  double tolerance_nu_db = 0.1;

  void validate() const;

  /// Bounds from the coverage radius (far edge) and the path-loss model's
  /// minimum distance (near edge).
  static SolverConfig from_radius(double radius_km, double nu_db = 0.1, const PathLossModel& model = {});

  /// ceil(log2((g0_max - g0_min) / nu)), the number of halvings needed.
  int max_iterations() const;
};

enum class Method { ML, MB };

std::string_view to_string(Method m) noexcept;

struct EstimateReport {
  Db g0_hat_db;
  Method method = Method::MB;
  int iterations = 0;
  double residual_score = 0.0;  // score at g0_hat; ML only
  std::int64_t elapsed_ns = 0;
  // ML only: the score kept one strict sign over the whole interval and the
  // estimate was pinned to the bound it points at.
  bool clamped = false;
};

/// Maximum-likelihood estimate of g0 by bisection on the score function.
/// The loop runs while the bracket is wider than nu, replacing the lower end
/// when score(mid) * score(min) > 0 and the upper end otherwise; the last
/// midpoint is returned.
EstimateReport ml_estimate(const SnrSampleSet& samples, Db gamma_t_db, Db g1_db, const SolverConfig& solver);

/// Median-based estimate: gamma_T + g1 - sample median. The two central
/// order statistics are found by selection (O(K)); the estimate itself is
/// O(1) arithmetic on them.
EstimateReport mb_estimate(const SnrSampleSet& samples, Db gamma_t_db, Db g1_db);

/// Middle order statistic (odd K) or the mean of the two central ones (even K).
Db sample_median_db(const SnrSampleSet& samples);

}  // namespace pgest
