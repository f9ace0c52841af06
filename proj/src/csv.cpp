#include "pgest/csv.hpp"

#include <cinttypes>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string_view>

namespace pgest {

namespace {

std::string fmt6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string fmt_int(std::int64_t v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%" PRId64, v);
  return buf;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoError, "cannot open " + path.string() + " for writing");
  out << text;
  out.flush();
  if (!out) throw Error(ErrorCode::IoError, "write failed for " + path.string());
}

std::ifstream open_for_read(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string() + " for reading");
  return in;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

double parse_double(std::string_view field, std::size_t line_no) {
  field = trim(field);
  // strtod accepts the inf/nan spellings printf emits.
  std::string tmp(field);
  char* end = nullptr;
  const double v = std::strtod(tmp.c_str(), &end);
  if (tmp.empty() || end != tmp.c_str() + tmp.size())
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": not a number: '" + tmp + "'");
  return v;
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    out.push_back(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

std::string format_curve_csv(const std::vector<CurvePoint>& points) {
  std::string out = kCurveCsvHeader;
  out += '\n';
  for (const CurvePoint& p : points) {
    out += fmt6(p.x) + ',' + fmt6(p.ml_err_db) + ',' + fmt6(p.mb_err_db) + ',' + fmt6(p.avg_ct_snr_db) + ',' +
           fmt6(p.ml_time_ns) + ',' + fmt6(p.mb_time_ns) + ',' + fmt_int(p.clamp_count) + '\n';
  }
  return out;
}

void write_curve_csv(const std::vector<CurvePoint>& points, const std::filesystem::path& path) {
  write_text(path, format_curve_csv(points));
}

std::vector<CurvePoint> read_curve_csv(const std::filesystem::path& path) {
  std::ifstream in = open_for_read(path);
  std::string line;
  if (!std::getline(in, line) || trim(line) != kCurveCsvHeader)
    throw Error(ErrorCode::ParseError, "unexpected curve CSV header in " + path.string());
  std::vector<CurvePoint> points;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto f = split(line);
    if (f.size() != 7) throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": expected 7 fields");
    CurvePoint p;
    p.x = parse_double(f[0], line_no);
    p.ml_err_db = parse_double(f[1], line_no);
    p.mb_err_db = parse_double(f[2], line_no);
    p.avg_ct_snr_db = parse_double(f[3], line_no);
    p.ml_time_ns = parse_double(f[4], line_no);
    p.mb_time_ns = parse_double(f[5], line_no);
    p.clamp_count = static_cast<std::int64_t>(parse_double(f[6], line_no));
    points.push_back(p);
  }
  return points;
}

std::string format_itemp_csv(const std::vector<ItempPoint>& points) {
  std::string out = kItempCsvHeader;
  out += '\n';
  for (const ItempPoint& p : points) {
    out += fmt6(p.x) + ',' + fmt6(p.g0_db) + ',' + fmt6(p.itemp_true_mw) + ',' + fmt6(p.itemp_ml_mw) + ',' +
           fmt6(p.itemp_mb_mw) + ',' + fmt6(p.outage_ml) + ',' + fmt6(p.outage_mb) + ',' + fmt_int(p.clamp_count) +
           '\n';
  }
  return out;
}

void write_itemp_csv(const std::vector<ItempPoint>& points, const std::filesystem::path& path) {
  write_text(path, format_itemp_csv(points));
}

SnrSampleSet read_samples_csv(const std::filesystem::path& path) {
  std::ifstream in = open_for_read(path);
  std::string line;
  if (!std::getline(in, line) || trim(line) != kSamplesCsvHeader)
    throw Error(ErrorCode::ParseError, std::string("expected header '") + kSamplesCsvHeader + "' in " + path.string());
  std::vector<double> values;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    values.push_back(parse_double(line, line_no));
  }
  return SnrSampleSet(std::move(values));
}

void write_samples_csv(const SnrSampleSet& samples, const std::filesystem::path& path) {
  std::ostringstream out;
  out << kSamplesCsvHeader << '\n';
  char buf[64];
  for (double s : samples.samples_db()) {
    std::snprintf(buf, sizeof buf, "%.17g", s);
    out << buf << '\n';
  }
  write_text(path, out.str());
}

}  // namespace pgest
