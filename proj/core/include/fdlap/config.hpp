#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fdlap {

struct ExperimentConfig {
  std::string command;
  std::vector<double> s;
  std::vector<double> alpha;
  std::vector<double> h;
  std::string r_policy = "growing";  // R = 1.1 max(2 R0, h^{-alpha})
  std::vector<std::string> corpus;
  double tol = 1e-10;
  std::string out = "-";
  std::string format = "csv";
  std::uint64_t seed = 1;
  int threads = 1;
  int samples = 100;
  double window = 1.5;  // evaluation half-width for operator comparisons

  bool operator==(const ExperimentConfig&) const = default;
};

// Throws ConfigError naming the offending key when a value is out of its domain.
void validate(const ExperimentConfig& cfg);

// `key = value` lines; lists are comma separated; '#' starts a comment.
ExperimentConfig parse_key_value(const std::string& text);
std::string to_key_value(const ExperimentConfig& cfg);

ExperimentConfig parse_json(const std::string& text);
std::string to_json(const ExperimentConfig& cfg);

// JSON when the first non-blank character is '{', key-value otherwise.
ExperimentConfig load_config(const std::string& path);

}  // namespace fdlap
