#pragma once

#include <cmath>
#include <compare>
#include <cstdint>
#include <random>

#include "pgest/error.hpp"

namespace pgest {

struct GainTag {};
struct PowerTag {};

/// A finite decibel-valued scalar. `Tag` separates relative quantities
/// (gains, SNRs: dB) from absolute powers (dBm) so the two cannot be mixed
/// by accident.
template <class Tag>
class Decibel {
 public:
  constexpr Decibel() noexcept = default;
  explicit Decibel(double v) : value_(v) {
    if (!std::isfinite(v)) throw Error(ErrorCode::NonFiniteValue, "decibel value must be finite");
  }

  double value() const noexcept { return value_; }

  auto operator<=>(const Decibel&) const = default;

  Decibel operator-() const { return Decibel(-value_); }

 private:
  double value_ = 0.0;
};

using Db = Decibel<GainTag>;
using Dbm = Decibel<PowerTag>;

inline Db operator+(Db a, Db b) { return Db(a.value() + b.value()); }
inline Db operator-(Db a, Db b) { return Db(a.value() - b.value()); }
inline Dbm operator+(Dbm p, Db g) { return Dbm(p.value() + g.value()); }
inline Dbm operator+(Db g, Dbm p) { return Dbm(p.value() + g.value()); }
inline Dbm operator-(Dbm p, Db g) { return Dbm(p.value() - g.value()); }
inline Db operator-(Dbm a, Dbm b) { return Db(a.value() - b.value()); }

/// Nonnegative linear-scale value (gain ratio, or power in mW).
class Lin {
 public:
  constexpr Lin() noexcept = default;
  explicit Lin(double v) : value_(v) {
    if (!std::isfinite(v)) throw Error(ErrorCode::NonFiniteValue, "linear value must be finite");
    if (v < 0.0) throw Error(ErrorCode::NegativeValue, "linear value must be >= 0");
  }

  double value() const noexcept { return value_; }

  auto operator<=>(const Lin&) const = default;

 private:
  double value_ = 0.0;
};

Lin db_to_lin(Db x);
Db lin_to_db(Lin x);
Lin dbm_to_mw(Dbm x);
Dbm mw_to_dbm(Lin x);

// Raw-double helpers for inner loops.
double db_to_lin_raw(double db) noexcept;
double lin_to_db_raw(double lin) noexcept;

/// Seeded random stream. Equal (master_seed, stream_index) pairs give
/// bit-identical sequences on a given standard library; distinct indices
/// are seeded through std::seed_seq so trial streams can be handed out
/// independently of scheduling.
class RngStream {
 public:
  RngStream(std::uint64_t master_seed, std::uint64_t stream_index);

  std::uint64_t master_seed() const noexcept { return master_seed_; }
  std::uint64_t stream_index() const noexcept { return stream_index_; }

  std::uint64_t next_u64() { return engine_(); }
  /// Uniform on [0, 1).
  double uniform();
  /// Uniform on [lo, hi).
  double uniform(double lo, double hi);
  /// Exponential with unit mean.
  double exponential();
  double standard_normal();

 private:
  std::uint64_t master_seed_;
  std::uint64_t stream_index_;
  std::mt19937_64 engine_;
  std::uniform_real_distribution<double> unit_{0.0, 1.0};
  std::exponential_distribution<double> exp_{1.0};
  std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace pgest
