#include "pgest/interference.hpp"

#include <cmath>

namespace pgest {

void ItempParams::validate() const {
  if (!(theta > 0.0 && theta < 1.0)) throw Error(ErrorCode::InvalidTheta, "outage target must lie in (0, 1)");
}

InterferenceBudget interference_temperature(const ItempParams& p) {
  p.validate();
  const double p_max = dbm_to_mw(p.p_max_dbm).value();
  const double g0 = db_to_lin(p.g0_db).value();
  const double gamma_t = db_to_lin(p.gamma_t_db).value();
  const double sigma2 = dbm_to_mw(p.sigma2_dbm).value();

  InterferenceBudget out;
  out.unclamped_mw = -p_max * g0 * std::log1p(-p.theta) / gamma_t - sigma2;
  out.clamped = out.unclamped_mw < 0.0;
  out.p_i_mw = Lin(out.clamped ? 0.0 : out.unclamped_mw);
  return out;
}

double outage_probability(const ItempParams& p, double p_i_mw) {
  if (!(p_i_mw >= 0.0)) throw Error(ErrorCode::NegativeInterference, "interference power must be >= 0");
  if (std::isinf(p_i_mw)) return 1.0;
  const double p_max = dbm_to_mw(p.p_max_dbm).value();
  const double g0 = db_to_lin(p.g0_db).value();
  const double gamma_t = db_to_lin(p.gamma_t_db).value();
  const double sigma2 = dbm_to_mw(p.sigma2_dbm).value();
  return -std::expm1(-gamma_t * (sigma2 + p_i_mw) / (p_max * g0));
}

}  // namespace pgest
