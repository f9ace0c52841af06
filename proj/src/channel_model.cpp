#include "pgest/channel_model.hpp"

#include <cmath>
#include <string>

namespace pgest {

void PathLossModel::validate() const {
  if (!(slope_db_per_decade > 0.0) || !std::isfinite(slope_db_per_decade))
    throw Error(ErrorCode::InvalidConfig, "path-loss slope must be > 0");
  if (!(min_distance_km > 0.0) || !std::isfinite(min_distance_km))
    throw Error(ErrorCode::InvalidConfig, "path-loss minimum distance must be > 0");
  if (!std::isfinite(intercept_db)) throw Error(ErrorCode::InvalidConfig, "path-loss intercept must be finite");
}

void Geometry::validate(const PathLossModel& model) const {
  const double dmin = model.min_distance_km;
  if (!(radius_km > dmin)) throw Error(ErrorCode::InvalidRadius, "coverage radius must exceed the minimum distance");
  if (!(d0_km >= dmin) || !(d0_km <= radius_km))
    throw Error(ErrorCode::InvalidGeometry, "d0 must lie in [min distance, R], got " + std::to_string(d0_km));
  if (!(d1_km >= dmin) || !std::isfinite(d1_km))
    throw Error(ErrorCode::InvalidGeometry, "d1 must be >= min distance, got " + std::to_string(d1_km));
}

Db path_loss_db(const PathLossModel& model, double d_km) {
  model.validate();
  if (!(d_km >= model.min_distance_km))
    throw Error(ErrorCode::DistanceTooSmall, "distance " + std::to_string(d_km) + " km is below the model minimum");
  return Db(model.intercept_db + model.slope_db_per_decade * std::log10(d_km));
}

Db large_scale_gain_db(const PathLossModel& model, double d_km) { return -path_loss_db(model, d_km); }

GainBounds gain_bounds_db(const PathLossModel& model, double radius_km) {
  model.validate();
  if (!(radius_km > model.min_distance_km) || !std::isfinite(radius_km))
    throw Error(ErrorCode::InvalidRadius, "coverage radius must exceed the minimum distance");
  return {large_scale_gain_db(model, radius_km), large_scale_gain_db(model, model.min_distance_km)};
}

BlockFading sample_block_fading(RngStream& rng) {
  auto draw = [&rng] {
    double x = 0.0;
    while (!(x > 0.0)) x = rng.exponential();
    return x;
  };
  BlockFading f;
  f.h0_sq = draw();
  f.h1_sq = draw();
  return f;
}

}  // namespace pgest
