#include "fdlap/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "fdlap/errors.hpp"
#include "fdlap/format.hpp"

namespace fdlap {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

double to_double(const std::string& key, const std::string& v) {
  double out = 0.0;
  const auto res = std::from_chars(v.data(), v.data() + v.size(), out);
  if (res.ec != std::errc() || res.ptr != v.data() + v.size())
    throw ConfigError("config key '" + key + "': '" + v + "' is not a number");
  return out;
}

template <class Int>
Int to_int(const std::string& key, const std::string& v) {
  Int out = 0;
  const auto res = std::from_chars(v.data(), v.data() + v.size(), out);
  if (res.ec != std::errc() || res.ptr != v.data() + v.size())
    throw ConfigError("config key '" + key + "': '" + v + "' is not an integer");
  return out;
}

std::vector<double> to_doubles(const std::string& key, const std::string& v) {
  std::vector<double> out;
  for (const auto& item : split(v)) out.push_back(to_double(key, item));
  return out;
}

std::string join(const std::vector<double>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + fmt_double(v[i]);
  return out;
}

std::string join(const std::vector<std::string>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i];
  return out;
}

}  // namespace

void validate(const ExperimentConfig& cfg) {
  for (double s : cfg.s)
    if (!(s > 0.0 && s < 1.0)) throw ConfigError("config key 's': every value must lie in (0,1)");
  for (double a : cfg.alpha)
    if (!(a > 0.0 && a <= 1.0)) throw ConfigError("config key 'alpha': every value must lie in (0,1]");
  for (double h : cfg.h)
    if (!(h > 0.0 && std::isfinite(h))) throw ConfigError("config key 'h': every value must be positive");
  if (cfg.r_policy != "growing") throw ConfigError("config key 'r_policy': only 'growing' is supported");
  if (!(cfg.tol > 0.0)) throw ConfigError("config key 'tol': must be positive");
  if (cfg.format != "csv" && cfg.format != "json") throw ConfigError("config key 'format': expected csv or json");
  if (cfg.threads < 1) throw ConfigError("config key 'threads': must be >= 1");
  if (cfg.samples < 1) throw ConfigError("config key 'samples': must be >= 1");
  if (!(cfg.window > 0.0)) throw ConfigError("config key 'window': must be positive");
}

ExperimentConfig parse_key_value(const std::string& text) {
  ExperimentConfig cfg;
  std::stringstream ss(text);
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config line " + std::to_string(lineno) + ": expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string v = trim(line.substr(eq + 1));
    if (key == "command") cfg.command = v;
    else if (key == "s") cfg.s = to_doubles(key, v);
    else if (key == "alpha") cfg.alpha = to_doubles(key, v);
    else if (key == "h") cfg.h = to_doubles(key, v);
    else if (key == "r_policy") cfg.r_policy = v;
    else if (key == "corpus") cfg.corpus = split(v);
    else if (key == "tol") cfg.tol = to_double(key, v);
    else if (key == "out") cfg.out = v;
    else if (key == "format") cfg.format = v;
    else if (key == "seed") cfg.seed = to_int<std::uint64_t>(key, v);
    else if (key == "threads") cfg.threads = to_int<int>(key, v);
    else if (key == "samples") cfg.samples = to_int<int>(key, v);
    else if (key == "window") cfg.window = to_double(key, v);
    else throw ConfigError("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
  }
  validate(cfg);
  return cfg;
}

std::string to_key_value(const ExperimentConfig& cfg) {
  std::ostringstream os;
  os << "command = " << cfg.command << '\n'
     << "s = " << join(cfg.s) << '\n'
     << "alpha = " << join(cfg.alpha) << '\n'
     << "h = " << join(cfg.h) << '\n'
     << "r_policy = " << cfg.r_policy << '\n'
     << "corpus = " << join(cfg.corpus) << '\n'
     << "tol = " << fmt_double(cfg.tol) << '\n'
     << "out = " << cfg.out << '\n'
     << "format = " << cfg.format << '\n'
     << "seed = " << cfg.seed << '\n'
     << "threads = " << cfg.threads << '\n'
     << "samples = " << cfg.samples << '\n'
     << "window = " << fmt_double(cfg.window) << '\n';
  return os.str();
}

ExperimentConfig parse_json(const std::string& text) {
  ExperimentConfig cfg;
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed config JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config JSON must be an object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& key = it.key();
    try {
      if (key == "command") cfg.command = it->get<std::string>();
      else if (key == "s") cfg.s = it->get<std::vector<double>>();
      else if (key == "alpha") cfg.alpha = it->get<std::vector<double>>();
      else if (key == "h") cfg.h = it->get<std::vector<double>>();
      else if (key == "r_policy") cfg.r_policy = it->get<std::string>();
      else if (key == "corpus") cfg.corpus = it->get<std::vector<std::string>>();
      else if (key == "tol") cfg.tol = it->get<double>();
      else if (key == "out") cfg.out = it->get<std::string>();
      else if (key == "format") cfg.format = it->get<std::string>();
      else if (key == "seed") cfg.seed = it->get<std::uint64_t>();
      else if (key == "threads") cfg.threads = it->get<int>();
      else if (key == "samples") cfg.samples = it->get<int>();
      else if (key == "window") cfg.window = it->get<double>();
      else throw ConfigError("config JSON: unknown key '" + key + "'");
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError("config JSON key '" + key + "': " + e.what());
    }
  }
  validate(cfg);
  return cfg;
}

std::string to_json(const ExperimentConfig& cfg) {
  nlohmann::ordered_json j;
  j["command"] = cfg.command;
  j["s"] = cfg.s;
  j["alpha"] = cfg.alpha;
  j["h"] = cfg.h;
  j["r_policy"] = cfg.r_policy;
  j["corpus"] = cfg.corpus;
  j["tol"] = cfg.tol;
  j["out"] = cfg.out;
  j["format"] = cfg.format;
  j["seed"] = cfg.seed;
  j["threads"] = cfg.threads;
  j["samples"] = cfg.samples;
  j["window"] = cfg.window;
  return j.dump(2);
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw ConfigError("cannot open config file '" + path + "'");
  std::stringstream ss;
  ss << is.rdbuf();
  const std::string text = ss.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return parse_json(text);
  return parse_key_value(text);
}

}  // namespace fdlap
