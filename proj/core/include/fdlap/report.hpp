#pragma once

#include <cmath>
#include <iosfwd>
#include <string>
#include <vector>

#include "fdlap/format.hpp"
#include "fdlap/rates.hpp"

namespace fdlap {

enum class Format { csv, json };

// Throws ConfigError for anything but "csv" or "json".
Format parse_format(const std::string& name);

// One output record; fields that do not apply are NaN and serialize as empty (CSV) or null (JSON).
struct ReportRow {
  std::string experiment;
  double s = NAN;
  double alpha = NAN;
  double h = NAN;
  double R = NAN;
  double error = NAN;
  double slope = NAN;
  double residual = NAN;
};

// One row per h, with the fitted slope and residual repeated.
std::vector<ReportRow> rows_of(const RateReport& r);

// Columns: experiment, s, alpha, h, R, error, slope, residual.
void emit(const std::vector<ReportRow>& rows, Format format, std::ostream& os);
// Writes to path; "-" means stdout. Throws ConfigError naming the path on I/O failure.
void emit(const std::vector<ReportRow>& rows, Format format, const std::string& path);

std::vector<ReportRow> parse_json_rows(const std::string& text);

}  // namespace fdlap
