#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "pgest/harness.hpp"
#include "pgest/sample_set.hpp"

namespace pgest {

inline constexpr const char* kCurveCsvHeader = "x,ml_err_db,mb_err_db,avg_ct_snr_db,ml_time_ns,mb_time_ns,clamp_count";
inline constexpr const char* kItempCsvHeader =
    "x,g0_db,itemp_true_mw,itemp_ml_mw,itemp_mb_mw,outage_ml,outage_mb,clamp_count";
inline constexpr const char* kSamplesCsvHeader = "gamma_c_db";

/// Numbers use printf "%.6g"; output bytes depend only on the input.
std::string format_curve_csv(const std::vector<CurvePoint>& points);
void write_curve_csv(const std::vector<CurvePoint>& points, const std::filesystem::path& path);
std::vector<CurvePoint> read_curve_csv(const std::filesystem::path& path);

std::string format_itemp_csv(const std::vector<ItempPoint>& points);
void write_itemp_csv(const std::vector<ItempPoint>& points, const std::filesystem::path& path);

/// Single-column `gamma_c_db` file, one sample per row.
SnrSampleSet read_samples_csv(const std::filesystem::path& path);
void write_samples_csv(const SnrSampleSet& samples, const std::filesystem::path& path);

}  // namespace pgest
