#include "fdlap/rates.hpp"

#include <cmath>

#include "fdlap/errors.hpp"

namespace fdlap {

RateReport fit_rate(std::vector<double> h, std::vector<double> error) {
  if (h.size() != error.size()) throw ContractViolation("fit_rate: h and error lengths differ");
  if (h.size() < 4) throw ContractViolation("fit_rate: at least 4 (h, error) pairs are required");
  for (std::size_t i = 1; i < h.size(); ++i)
    if (!(h[i] < h[i - 1])) throw ContractViolation("fit_rate: h must be strictly decreasing");
  RateReport r;
  r.h = std::move(h);
  r.error = std::move(error);
  const double n = static_cast<double>(r.h.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  bool positive = true;
  for (std::size_t i = 0; i < r.h.size(); ++i) {
    if (!(r.error[i] > 0.0) || !(r.h[i] > 0.0)) positive = false;
    const double x = std::log(r.h[i]);
    const double y = std::log(r.error[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  if (!positive) {
    r.slope = NAN;
    r.intercept = NAN;
    r.residual = NAN;
    return r;
  }
  r.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  r.intercept = (sy - r.slope * sx) / n;
  double ss = 0.0;
  for (std::size_t i = 0; i < r.h.size(); ++i) {
    const double d = std::log(r.error[i]) - (r.intercept + r.slope * std::log(r.h[i]));
    ss += d * d;
  }
  r.residual = std::sqrt(ss / n);
  r.established = std::isfinite(r.slope) && r.residual < kRateResidualLimit;
  return r;
}

bool slope_within(const RateReport& r, double rate, double below, double above) {
  return r.established && r.slope >= rate - below && r.slope <= rate + above;
}

}  // namespace fdlap
