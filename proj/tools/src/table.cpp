#include "table.hpp"

#include <cmath>
#include <iostream>
#include <json.hpp>

#include "fdlap/errors.hpp"
#include "fdlap/format.hpp"

namespace fdlap::cli {
namespace {

std::string csv_cell(const Cell& c) {
  struct Visitor {
    std::string operator()(std::monostate) const { return ""; }
    std::string operator()(double v) const { return std::isnan(v) ? "" : fmt_double(v); }
    std::string operator()(long v) const { return std::to_string(v); }
    std::string operator()(const std::string& v) const {
      if (v.find_first_of(",\"\n") == std::string::npos) return v;
      std::string q = "\"";
      for (char ch : v) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
      return q + "\"";
    }
    std::string operator()(bool v) const { return v ? "true" : "false"; }
  };
  return std::visit(Visitor{}, c);
}

nlohmann::ordered_json json_cell(const Cell& c) {
  struct Visitor {
    nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
    nlohmann::ordered_json operator()(double v) const {
      if (!std::isfinite(v)) return nullptr;
      return v;
    }
    nlohmann::ordered_json operator()(long v) const { return v; }
    nlohmann::ordered_json operator()(const std::string& v) const { return v; }
    nlohmann::ordered_json operator()(bool v) const { return v; }
  };
  return std::visit(Visitor{}, c);
}

}  // namespace

void write_table(const Table& t, Format format, std::ostream& os) {
  if (format == Format::csv) {
    for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
    os << '\n';
    for (const auto& row : t.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_cell(row[i]);
      os << '\n';
    }
    return;
  }
  auto arr = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < t.columns.size(); ++i)
      obj[t.columns[i]] = i < row.size() ? json_cell(row[i]) : nullptr;
    arr.push_back(std::move(obj));
  }
  os << arr.dump(2) << '\n';
}

void write_grid(const GridFunction& u, Format format, std::ostream& os) {
  if (format == Format::csv) {
    write_csv(os, u);
    return;
  }
  nlohmann::ordered_json j;
  j["h"] = u.h();
  j["offset"] = u.offset();
  j["values"] = std::vector<double>(u.values().begin(), u.values().end());
  os << j.dump(2) << '\n';
}

Output::Output(std::string path) : path_(std::move(path)) {
  if (path_ == "-") return;
  file_.open(path_);
  if (!file_) throw ConfigError("cannot open output file '" + path_ + "'");
}

std::ostream& Output::stream() { return path_ == "-" ? std::cout : file_; }

void Output::finish() {
  stream().flush();
  if (!stream()) throw ConfigError("write failed for '" + path_ + "'");
}

}  // namespace fdlap::cli
