#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>

namespace fdlap {

// Argument outside the mathematical domain of a formula (s out of range, x <= 0, ...).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// Caller broke a precondition that is not a domain question (mismatched h, bad window).
class ContractViolation : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// An iterative or quadrature procedure stopped short of its tolerance.
class NumericalError : public std::runtime_error {
public:
  NumericalError(const std::string& what, double achieved)
      : std::runtime_error(what + " (achieved " + short_number(achieved) + ")"),
        achieved_(achieved) {}
  double achieved() const noexcept { return achieved_; }

private:
  static std::string short_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
  }
  double achieved_;
};

// Malformed or inconsistent experiment configuration.
class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace fdlap
