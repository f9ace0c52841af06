#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "pgest/units.hpp"

namespace pgest {

/// K per-block SNRs measured at the CT, in dB, in block order. Never empty.
class SnrSampleSet {
 public:
  explicit SnrSampleSet(std::vector<double> samples_db);
  SnrSampleSet(std::initializer_list<double> samples_db)
      : SnrSampleSet(std::vector<double>(samples_db)) {}

  std::size_t k_count() const noexcept { return samples_db_.size(); }
  std::span<const double> samples_db() const noexcept { return samples_db_; }
  Db operator[](std::size_t k) const { return Db(samples_db_[k]); }

  double mean_db() const noexcept;

 private:
  std::vector<double> samples_db_;
};

}  // namespace pgest
