#include "pgest/units.hpp"

#include <array>
#include <cmath>

namespace pgest {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonFiniteValue: return "NonFiniteValue";
    case ErrorCode::NonPositiveValue: return "NonPositiveValue";
    case ErrorCode::NegativeValue: return "NegativeValue";
    case ErrorCode::DistanceTooSmall: return "DistanceTooSmall";
    case ErrorCode::InvalidRadius: return "InvalidRadius";
    case ErrorCode::InvalidGeometry: return "InvalidGeometry";
    case ErrorCode::ZeroFading: return "ZeroFading";
    case ErrorCode::NegativeRatio: return "NegativeRatio";
    case ErrorCode::EmptySampleSet: return "EmptySampleSet";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::InvalidTheta: return "InvalidTheta";
    case ErrorCode::NegativeInterference: return "NegativeInterference";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

double db_to_lin_raw(double db) noexcept { return std::pow(10.0, db / 10.0); }
double lin_to_db_raw(double lin) noexcept { return 10.0 * std::log10(lin); }

Lin db_to_lin(Db x) { return Lin(db_to_lin_raw(x.value())); }

Db lin_to_db(Lin x) {
  if (x.value() <= 0.0) throw Error(ErrorCode::NonPositiveValue, "cannot convert <= 0 to dB");
  return Db(lin_to_db_raw(x.value()));
}

Lin dbm_to_mw(Dbm x) { return Lin(db_to_lin_raw(x.value())); }

Dbm mw_to_dbm(Lin x) {
  if (x.value() <= 0.0) throw Error(ErrorCode::NonPositiveValue, "cannot convert <= 0 mW to dBm");
  return Dbm(lin_to_db_raw(x.value()));
}

namespace {

std::mt19937_64 seeded_engine(std::uint64_t seed, std::uint64_t index) {
  const std::array<std::uint32_t, 4> words{
      static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::seed_seq seq(words.begin(), words.end());
  return std::mt19937_64(seq);
}

}  // namespace

RngStream::RngStream(std::uint64_t master_seed, std::uint64_t stream_index)
    : master_seed_(master_seed),
      stream_index_(stream_index),
      engine_(seeded_engine(master_seed, stream_index)) {}

double RngStream::uniform() { return unit_(engine_); }

double RngStream::uniform(double lo, double hi) { return lo + (hi - lo) * unit_(engine_); }

double RngStream::exponential() { return exp_(engine_); }

double RngStream::standard_normal() { return normal_(engine_); }

}  // namespace pgest
