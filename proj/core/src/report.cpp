#include "fdlap/report.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "fdlap/errors.hpp"

namespace fdlap {

std::string fmt_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  std::array<char, 32> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

Format parse_format(const std::string& name) {
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  throw ConfigError("unknown output format '" + name + "' (expected csv or json)");
}

std::vector<ReportRow> rows_of(const RateReport& r) {
  std::vector<ReportRow> rows;
  const std::string name = r.case_id.empty() ? r.experiment : r.experiment + ":" + r.case_id;
  for (std::size_t i = 0; i < r.h.size(); ++i) {
    ReportRow row;
    row.experiment = name;
    row.s = r.s;
    row.alpha = r.alpha;
    row.h = r.h[i];
    row.R = i < r.R.size() ? r.R[i] : NAN;
    row.error = r.error[i];
    row.slope = r.slope;
    row.residual = r.residual;
    rows.push_back(row);
  }
  return rows;
}

namespace {

std::string csv_field(double v) { return std::isnan(v) ? std::string() : fmt_double(v); }

nlohmann::ordered_json json_field(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

double from_json_field(const nlohmann::json& j) { return j.is_null() ? NAN : j.get<double>(); }

}  // namespace

void emit(const std::vector<ReportRow>& rows, Format format, std::ostream& os) {
  if (format == Format::csv) {
    os << "experiment,s,alpha,h,R,error,slope,residual\n";
    for (const auto& r : rows) {
      os << r.experiment << ',' << csv_field(r.s) << ',' << csv_field(r.alpha) << ',' << csv_field(r.h) << ','
         << csv_field(r.R) << ',' << csv_field(r.error) << ',' << csv_field(r.slope) << ','
         << csv_field(r.residual) << '\n';
    }
    return;
  }
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json o;
    o["experiment"] = r.experiment;
    o["s"] = json_field(r.s);
    o["alpha"] = json_field(r.alpha);
    o["h"] = json_field(r.h);
    o["R"] = json_field(r.R);
    o["error"] = json_field(r.error);
    o["slope"] = json_field(r.slope);
    o["residual"] = json_field(r.residual);
    arr.push_back(std::move(o));
  }
  os << arr.dump(2) << '\n';
}

void emit(const std::vector<ReportRow>& rows, Format format, const std::string& path) {
  if (path.empty() || path == "-") {
    emit(rows, format, std::cout);
    return;
  }
  std::ofstream os(path);
  if (!os) throw ConfigError("cannot open output file '" + path + "'");
  emit(rows, format, os);
  os.flush();
  if (!os) throw ConfigError("failed writing output file '" + path + "'");
}

std::vector<ReportRow> parse_json_rows(const std::string& text) {
  std::vector<ReportRow> rows;
  try {
    const auto arr = nlohmann::json::parse(text);
    for (const auto& o : arr) {
      ReportRow r;
      r.experiment = o.at("experiment").get<std::string>();
      r.s = from_json_field(o.at("s"));
      r.alpha = from_json_field(o.at("alpha"));
      r.h = from_json_field(o.at("h"));
      r.R = from_json_field(o.at("R"));
      r.error = from_json_field(o.at("error"));
      r.slope = from_json_field(o.at("slope"));
      r.residual = from_json_field(o.at("residual"));
      rows.push_back(r);
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed report JSON: ") + e.what());
  }
  return rows;
}

}  // namespace fdlap
