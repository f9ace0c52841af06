#include "pgest/snr_stats.hpp"

#include <cmath>
#include <numbers>

namespace pgest {

namespace {

constexpr double kLn10 = std::numbers::ln10;
// |exponent| (in decades) past which (w-1)/(w+1) is +-1 to double precision.
constexpr double kSaturationDecades = 30.0;

// log10(1 + 10^t) without overflow.
double log10_one_plus_pow10(double t) noexcept {
  if (t > 0.0) return t + std::log10(1.0 + std::pow(10.0, -t));
  return std::log10(1.0 + std::pow(10.0, t));
}

double score_term(double exponent_decades) noexcept {
  if (exponent_decades > kSaturationDecades) return 0.1;
  if (exponent_decades < -kSaturationDecades) return -0.1;
  const double w = std::exp(exponent_decades * kLn10);
  return 0.1 * (w - 1.0) / (w + 1.0);
}

}  // namespace

double ratio_cdf(double phi) {
  if (!(phi >= 0.0)) throw Error(ErrorCode::NegativeRatio, "fading ratio must be >= 0");
  if (std::isinf(phi)) return 1.0;
  return phi / (1.0 + phi);
}

double snr_cdf_db(Db gamma_c_db, const SnrLawParams& p) {
  // u/(1+u) = 1/(1+1/u), evaluated so neither tail overflows.
  const double t = (gamma_c_db.value() - p.location_db()) / 10.0;
  if (t >= 0.0) return 1.0 / (1.0 + std::pow(10.0, -t));
  const double u = std::pow(10.0, t);
  return u / (1.0 + u);
}

double snr_pdf_db(Db gamma_c_db, const SnrLawParams& p) {
  // v/(1+v)^2 is symmetric under v -> 1/v; use the branch with v <= 1.
  const double t = -std::abs(p.location_db() - gamma_c_db.value()) / 10.0;
  const double v = std::pow(10.0, t);
  return (kLn10 / 10.0) * v / ((1.0 + v) * (1.0 + v));
}

double log_likelihood(const SnrSampleSet& samples, Db g0_db, Db gamma_t_db, Db g1_db) {
  const double offset = gamma_t_db.value() + g1_db.value() - g0_db.value();
  double total = 0.0;
  for (double s : samples.samples_db()) {
    const double t = (offset - s) / 10.0;  // log10 v
    total += (std::log10(kLn10) + t) - 2.0 * log10_one_plus_pow10(t) - 1.0;
  }
  return total;
}

double score_f1_raw(std::span<const double> samples_db, double offset_db, double g0_db) noexcept {
  const double centre = offset_db - g0_db;
  double total = 0.0;
  for (double s : samples_db) total += score_term((centre - s) / 10.0);
  return total;
}

double score_f1(const SnrSampleSet& samples, Db g0_db, Db gamma_t_db, Db g1_db) {
  return score_f1_raw(samples.samples_db(), gamma_t_db.value() + g1_db.value(), g0_db.value());
}

Db snr_median_db(const SnrLawParams& p) { return Db(p.location_db()); }

}  // namespace pgest
