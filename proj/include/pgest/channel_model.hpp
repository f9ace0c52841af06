#pragma once

#include <utility>

#include "pgest/units.hpp"

namespace pgest {

/// Log-distance path loss, PL(d) = intercept + slope * log10(d_km), valid
/// for d >= min_distance_km. Defaults are the 3GPP macro-cell constants.
struct PathLossModel {
  double intercept_db = 128.0;
  double slope_db_per_decade = 37.6;
  double min_distance_km = 0.035;

  void validate() const;
};

/// PT->PR distance d0, PT->CT distance d1, PT coverage radius R (all km).
struct Geometry {
  double d0_km = 0.25;
  double d1_km = 0.1;
  double radius_km = 0.5;

  void validate(const PathLossModel& model = {}) const;
};

/// Small-scale power gains |h0|^2 (PT->PR) and |h1|^2 (PT->CT) for one block.
struct BlockFading {
  double h0_sq = 1.0;
  double h1_sq = 1.0;
};

Db path_loss_db(const PathLossModel& model, double d_km);

/// Large-scale gain g = -PL(d) in dB.
Db large_scale_gain_db(const PathLossModel& model, double d_km);

struct GainBounds {
  Db g_min;  // at the coverage edge
  Db g_max;  // at the minimum valid distance
};

GainBounds gain_bounds_db(const PathLossModel& model, double radius_km);

/// |h|^2 is exponential with unit mean (Rayleigh amplitude, unit mean power).
/// Both gains are drawn independently; zero draws are rejected.
BlockFading sample_block_fading(RngStream& rng);

}  // namespace pgest
