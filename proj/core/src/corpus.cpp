#include <cmath>
#include <cstdio>

#include "fdlap/continuum.hpp"
#include "fdlap/errors.hpp"

namespace fdlap {

double bump(double x, double rho) {
  const double t = x / rho;
  const double q = 1.0 - t * t;
  if (q <= 0.0) return 0.0;
  return std::exp(1.0 - 1.0 / q);
}

namespace {

double bump_derivative(double x) {
  const double q = 1.0 - x * x;
  if (q <= 0.0) return 0.0;
  return bump(x) * (-2.0 * x / (q * q));
}

double bump_second_derivative(double x) {
  const double q = 1.0 - x * x;
  if (q <= 0.0) return 0.0;
  const double d = 2.0 * x / (q * q);
  return bump(x) * (d * d - 2.0 / (q * q) - 8.0 * x * x / (q * q * q));
}

std::string tag(double alpha) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%.1f", alpha);
  return buf;
}

}  // namespace

TestFunction cosine(double omega, double phase) {
  if (!(omega > 0.0) || !std::isfinite(omega)) throw ContractViolation("cosine: omega must be positive");
  TestFunction t;
  t.id = omega == 1.0 && phase == 0.0 ? "cos" : "cos(" + std::to_string(omega) + ")";
  t.klass = "smooth";
  t.value = [omega, phase](double x) { return std::cos(omega * x + phase); };
  t.derivative = [omega, phase](double x) { return -omega * std::sin(omega * x + phase); };
  t.k = 2;
  t.alpha = 1.0;
  t.decay = Decay::periodic;
  t.omega = omega;
  t.phase = phase;
  return t;
}

TestFunction gaussian() {
  TestFunction t;
  t.id = "gauss";
  t.klass = "smooth";
  t.value = [](double x) { return std::exp(-x * x); };
  t.derivative = [](double x) { return -2.0 * x * std::exp(-x * x); };
  t.second_derivative = [](double x) { return (4.0 * x * x - 2.0) * std::exp(-x * x); };
  t.k = 2;
  t.alpha = 1.0;
  t.decay = Decay::gaussian;
  return t;
}

TestFunction smooth_bump() {
  TestFunction t;
  t.id = "bump";
  t.klass = "smooth";
  t.value = [](double x) { return bump(x); };
  t.derivative = bump_derivative;
  t.second_derivative = bump_second_derivative;
  t.k = 2;
  t.alpha = 1.0;
  t.support = 1.0;
  t.decay = Decay::compact;
  return t;
}

TestFunction holder_bump(double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw ContractViolation("holder_bump: alpha must lie in (0,1]");
  TestFunction t;
  t.id = "holder-" + tag(alpha);
  t.klass = "holder";
  t.value = [alpha](double x) { return std::pow(std::abs(x), alpha) * bump(x); };
  t.k = 0;
  t.alpha = alpha;
  t.support = 1.0;
  t.decay = Decay::compact;
  t.kinks = {0.0};
  return t;
}

TestFunction c1_holder_bump(double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw ContractViolation("c1_holder_bump: alpha must lie in (0,1]");
  TestFunction t;
  t.id = "c1-" + tag(alpha);
  t.klass = "c1-holder";
  t.value = [alpha](double x) { return std::pow(std::abs(x), 1.0 + alpha) * bump(x); };
  t.derivative = [alpha](double x) {
    const double ax = std::abs(x);
    return (1.0 + alpha) * std::pow(ax, alpha) * std::copysign(1.0, x) * bump(x) +
           std::pow(ax, 1.0 + alpha) * bump_derivative(x);
  };
  t.k = 1;
  t.alpha = alpha;
  t.support = 1.0;
  t.decay = Decay::compact;
  t.kinks = {0.0};
  return t;
}

TestFunction constant_function(double c) {
  TestFunction t;
  t.id = "const";
  t.klass = "smooth";
  t.value = [c](double) { return c; };
  t.derivative = [](double) { return 0.0; };
  t.second_derivative = [](double) { return 0.0; };
  t.k = 2;
  t.alpha = 1.0;
  t.decay = Decay::constant;
  return t;
}

std::vector<TestFunction> corpus() {
  return {cosine(1.0),        gaussian(),          smooth_bump(),       holder_bump(0.3),   holder_bump(0.6),
          holder_bump(0.9),   c1_holder_bump(0.3), c1_holder_bump(0.6), constant_function()};
}

TestFunction corpus_entry(const std::string& id) {
  for (auto& t : corpus())
    if (t.id == id) return t;
  throw ConfigError("unknown corpus id '" + id + "'");
}

}  // namespace fdlap
