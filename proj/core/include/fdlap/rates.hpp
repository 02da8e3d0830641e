#pragma once

#include <string>
#include <vector>

namespace fdlap {

// Least-squares fit of log(error) against log(h).
struct RateReport {
  std::string experiment;
  std::string case_id;
  double s = 0.0;
  double alpha = 0.0;
  std::vector<double> h;      // strictly decreasing
  std::vector<double> error;  // sup-norm error per h
  std::vector<double> R;      // ball radius per h, empty when not applicable
  double slope = 0.0;
  double intercept = 0.0;
  double residual = 0.0;      // RMS of the log-space residuals
  bool established = false;   // residual < kRateResidualLimit and slope finite
};

inline constexpr double kRateResidualLimit = 0.15;

// Throws ContractViolation for fewer than 4 pairs or h not strictly decreasing.
RateReport fit_rate(std::vector<double> h, std::vector<double> error);

// True when the rate is established and the slope lies in [rate - below, rate + above].
bool slope_within(const RateReport& r, double rate, double below = 0.1, double above = 0.15);

}  // namespace fdlap
