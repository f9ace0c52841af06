#pragma once

#include <cstddef>
#include <span>

#include "pgest/channel_model.hpp"
#include "pgest/sample_set.hpp"
#include "pgest/units.hpp"

namespace pgest {

struct PrimaryConfig {
  Db gamma_t_db{10.0};
  Dbm sigma2_dbm{-114.0};
  Geometry geometry{};
  Dbm p_max_dbm{43.0};
  PathLossModel path_loss{};
  // Clip the CLPC power at p_max. Off for the estimation experiments.
  bool clip_at_p_max = false;

  void validate() const;
  Db g0_db() const { return large_scale_gain_db(path_loss, geometry.d0_km); }
  Db g1_db() const { return large_scale_gain_db(path_loss, geometry.d1_km); }
};

/// Energy-detector SNR measurement over J unit-power symbols with known
/// noise power. `exact` bypasses the detector and reports the true SNR
/// (the J -> infinity limit).
struct MeasurementConfig {
  int j_samples = 100;
  double snr_floor_lin = 1e-6;
  bool exact = false;

  void validate() const;
  static MeasurementConfig noiseless() { return {.j_samples = 1, .snr_floor_lin = 1e-6, .exact = true}; }
};

/// Closed-loop power control: p0 = gamma_T sigma^2 / (|h0|^2 g0), in dBm.
Dbm clpc_power_dbm(const PrimaryConfig& cfg, Db g0_db, double h0_sq);

/// SNR at the PR, |h0|^2 g0 p0 / sigma^2, in dB.
Db pr_snr_db(const PrimaryConfig& cfg, Db g0_db, double h0_sq, Dbm p0_dbm);

/// Noise-free SNR at the CT under CLPC:
/// gamma_T + g1 - g0 + 10 log10(|h1|^2 / |h0|^2).
Db ct_true_snr_db(const PrimaryConfig& cfg, Db g0_db, Db g1_db, const BlockFading& fading);

/// One energy-detector SNR measurement. Simulates y(j) = sqrt(gamma) s(j) + w(j)
/// with |s| = 1 and w ~ CN(0, 1), and returns
/// 10 log10(max(mean |y|^2 - 1, floor)).
Db measure_snr_db(Db true_snr, const MeasurementConfig& meas, RngStream& rng);

/// K blocks: fading draw, CT SNR, measurement, in that order per block.
SnrSampleSet simulate_sample_set(const PrimaryConfig& cfg, const MeasurementConfig& meas, std::size_t k_blocks,
                                 RngStream& rng);

/// Same as above with caller-supplied fading (one entry per block).
SnrSampleSet simulate_sample_set(const PrimaryConfig& cfg, const MeasurementConfig& meas,
                                 std::span<const BlockFading> fading, RngStream& rng);

}  // namespace pgest
