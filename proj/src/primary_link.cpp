#include "pgest/primary_link.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace pgest {

SnrSampleSet::SnrSampleSet(std::vector<double> samples_db) : samples_db_(std::move(samples_db)) {
  if (samples_db_.empty()) throw Error(ErrorCode::EmptySampleSet, "sample set needs at least one SNR");
  for (double s : samples_db_)
    if (!std::isfinite(s)) throw Error(ErrorCode::NonFiniteValue, "SNR samples must be finite");
}

double SnrSampleSet::mean_db() const noexcept {
  return std::accumulate(samples_db_.begin(), samples_db_.end(), 0.0) / static_cast<double>(samples_db_.size());
}

void PrimaryConfig::validate() const {
  path_loss.validate();
  geometry.validate(path_loss);
}

void MeasurementConfig::validate() const {
  if (j_samples < 1) throw Error(ErrorCode::InvalidConfig, "J must be >= 1");
  if (!(snr_floor_lin > 0.0) || !std::isfinite(snr_floor_lin))
    throw Error(ErrorCode::InvalidConfig, "SNR floor must be > 0");
}

namespace {

void require_positive_fading(double h_sq) {
  if (!(h_sq > 0.0)) throw Error(ErrorCode::ZeroFading, "fading power must be > 0");
}

}  // namespace

Dbm clpc_power_dbm(const PrimaryConfig& cfg, Db g0_db, double h0_sq) {
  require_positive_fading(h0_sq);
  Dbm p0 = cfg.sigma2_dbm + cfg.gamma_t_db - g0_db - Db(lin_to_db_raw(h0_sq));
  if (cfg.clip_at_p_max) p0 = std::min(p0, cfg.p_max_dbm);
  return p0;
}

Db pr_snr_db(const PrimaryConfig& cfg, Db g0_db, double h0_sq, Dbm p0_dbm) {
  require_positive_fading(h0_sq);
  return (p0_dbm + g0_db + Db(lin_to_db_raw(h0_sq))) - cfg.sigma2_dbm;
}

Db ct_true_snr_db(const PrimaryConfig& cfg, Db g0_db, Db g1_db, const BlockFading& fading) {
  require_positive_fading(fading.h0_sq);
  require_positive_fading(fading.h1_sq);
  return cfg.gamma_t_db + g1_db - g0_db + Db(lin_to_db_raw(fading.h1_sq / fading.h0_sq));
}

Db measure_snr_db(Db true_snr, const MeasurementConfig& meas, RngStream& rng) {
  meas.validate();
  if (meas.exact) return true_snr;

  // The noise is circular, so |sqrt(g) s + w|^2 has the same law for every
  // unit-modulus s; s = 1 is used throughout.
  const double amp = std::sqrt(db_to_lin_raw(true_snr.value()));
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  double energy = 0.0;
  for (int j = 0; j < meas.j_samples; ++j) {
    const double re = amp + inv_sqrt2 * rng.standard_normal();
    const double im = inv_sqrt2 * rng.standard_normal();
    energy += re * re + im * im;
  }
  const double snr_lin = energy / static_cast<double>(meas.j_samples) - 1.0;
  return Db(lin_to_db_raw(std::max(snr_lin, meas.snr_floor_lin)));
}

namespace {

Db block_snr_db(const PrimaryConfig& cfg, Db g0, Db g1, const BlockFading& f) {
  if (!cfg.clip_at_p_max) return ct_true_snr_db(cfg, g0, g1, f);
  require_positive_fading(f.h1_sq);
  const Dbm p0 = clpc_power_dbm(cfg, g0, f.h0_sq);
  return (p0 + g1 + Db(lin_to_db_raw(f.h1_sq))) - cfg.sigma2_dbm;
}

}  // namespace

SnrSampleSet simulate_sample_set(const PrimaryConfig& cfg, const MeasurementConfig& meas, std::size_t k_blocks,
                                 RngStream& rng) {
  if (k_blocks < 1) throw Error(ErrorCode::InvalidConfig, "K must be >= 1");
  cfg.validate();
  meas.validate();
  const Db g0 = cfg.g0_db();
  const Db g1 = cfg.g1_db();
  std::vector<double> out;
  out.reserve(k_blocks);
  for (std::size_t k = 0; k < k_blocks; ++k) {
    const BlockFading f = sample_block_fading(rng);
    out.push_back(measure_snr_db(block_snr_db(cfg, g0, g1, f), meas, rng).value());
  }
  return SnrSampleSet(std::move(out));
}

SnrSampleSet simulate_sample_set(const PrimaryConfig& cfg, const MeasurementConfig& meas,
                                 std::span<const BlockFading> fading, RngStream& rng) {
  if (fading.empty()) throw Error(ErrorCode::InvalidConfig, "K must be >= 1");
  cfg.validate();
  meas.validate();
  const Db g0 = cfg.g0_db();
  const Db g1 = cfg.g1_db();
  std::vector<double> out;
  out.reserve(fading.size());
  for (const BlockFading& f : fading) out.push_back(measure_snr_db(block_snr_db(cfg, g0, g1, f), meas, rng).value());
  return SnrSampleSet(std::move(out));
}

}  // namespace pgest
