#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "topvert/qseries.hpp"

namespace topvert {

inline constexpr const char* kVersion = "0.1.0";

struct Mismatch {
  /// Which part of the check, e.g. "a^2" or "route trace-E0"; may be empty.
  std::string part;
  CoeffMismatch coeff;
};

/// Outcome of one verification. Passes iff it has no mismatches, no other
/// failures and every sub-report passes.
struct Report {
  std::string check;
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<Mismatch> mismatches;
  std::vector<std::string> failures;
  std::vector<Report> parts;
  /// Optional payload series, reported on [series_lo, series_hi].
  std::optional<QSeries> series;
  HalfExp series_lo;
  HalfExp series_hi;
  /// Optional payload of integer counts keyed by volume.
  std::optional<std::map<long, Integer>> counts;

  bool pass() const;
  Report& param(const std::string& key, const std::string& value);
  Report& param(const std::string& key, long value) { return param(key, std::to_string(value)); }
  Report& param(const std::string& key, HalfExp value) { return param(key, value.to_string()); }
  /// Appends the mismatches of a comparison.
  void record(const std::vector<CoeffMismatch>& found, const std::string& part = {});
  /// Adds a failure unless `ok`.
  void expect(bool ok, const std::string& what);
};

/// Compares two q-series on [lo, hi] into a fresh report.
Report compare_report(const std::string& check, const QSeries& lhs, const QSeries& rhs, HalfExp lo, HalfExp hi);

enum class OutputFormat { text, json };

/// JSON text for a series window, in the schema
/// {"qorder", "pwindow": [lo2, hi2], "coeffs": [[d, [[e2, "num/den"], ...]], ...]}.
std::string series_json(const QSeries& s, HalfExp lo, HalfExp hi);
/// Report as JSON with sorted keys; no timings.
std::string report_json(const Report& r);
void write_report(std::ostream& out, const Report& r, OutputFormat format);

}  // namespace topvert
