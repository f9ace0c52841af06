#pragma once

#include "pgest/units.hpp"

namespace pgest {

struct ItempParams {
  Dbm p_max_dbm{43.0};
  double theta = 0.1;  // target outage probability, in (0, 1)
  Db gamma_t_db{10.0};
  Dbm sigma2_dbm{-114.0};
  Db g0_db{-105.363};

  void validate() const;
};

struct InterferenceBudget {
  Lin p_i_mw;               // max(unclamped, 0)
  double unclamped_mw = 0;  // -p_max g0 ln(1 - theta) / gamma_T - sigma^2
  bool clamped = false;     // the link misses theta even without interference
};

/// Largest CT interference power at the PR that keeps the PR outage
/// probability at theta when the PT transmits at p_max.
InterferenceBudget interference_temperature(const ItempParams& p);

/// Pr{p_max g0 |h0|^2 / (sigma^2 + p_i) < gamma_T} with |h0|^2 ~ Exp(1),
/// i.e. 1 - exp(-gamma_T (sigma^2 + p_i) / (p_max g0)).
double outage_probability(const ItempParams& p, double p_i_mw);

}  // namespace pgest
