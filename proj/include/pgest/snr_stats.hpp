#pragma once

#include "pgest/sample_set.hpp"
#include "pgest/units.hpp"

namespace pgest {

/// Parameters of the dB-domain CT SNR law. Under CLPC and i.i.d. unit-mean
/// exponential fading the CT SNR is a logistic variable centred on
/// gamma_T + g1 - g0 with scale 10/ln(10) dB.
struct SnrLawParams {
  Db gamma_t_db;
  Db g1_db;
  Db g0_db;

  double location_db() const noexcept { return gamma_t_db.value() + g1_db.value() - g0_db.value(); }
};

/// CDF of phi = |h1|^2/|h0|^2: phi/(1+phi).
double ratio_cdf(double phi);

double snr_cdf_db(Db gamma_c_db, const SnrLawParams& p);

/// Density per dB: (ln10/10) v / (1+v)^2, v = 10^((location - gamma_c)/10).
double snr_pdf_db(Db gamma_c_db, const SnrLawParams& p);

/// Base-10 log-likelihood of the samples at candidate g0, written
/// term-for-term as sum_k [log10(ln10 * v_k) - 2 log10(1 + v_k) - 1].
double log_likelihood(const SnrSampleSet& samples, Db g0_db, Db gamma_t_db, Db g1_db);

/// Derivative of log_likelihood with respect to g0:
/// sum_k (1/10) (w_k - 1)/(w_k + 1), w_k = 10^((gamma_T + g1 - g0 - gamma_c(k))/10).
/// Non-increasing in g0, tends to +K/10 as g0 -> -inf and -K/10 as g0 -> +inf.
double score_f1(const SnrSampleSet& samples, Db g0_db, Db gamma_t_db, Db g1_db);

/// Raw form used by the bisection loop: `offset_db` is gamma_T + g1.
double score_f1_raw(std::span<const double> samples_db, double offset_db, double g0_db) noexcept;

Db snr_median_db(const SnrLawParams& p);

}  // namespace pgest
