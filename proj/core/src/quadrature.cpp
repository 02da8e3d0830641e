#include "fdlap/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include "fdlap/errors.hpp"

namespace fdlap {
namespace {

using Gauss = boost::math::quadrature::gauss<double, 20>;

double gl_panel(const ScalarFn& f, double a, double b) {
  const auto& x = Gauss::abscissa();
  const auto& w = Gauss::weights();
  const double c = 0.5 * (a + b);
  const double r = 0.5 * (b - a);
  double acc = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0.0) {
      acc += w[i] * f(c);
    } else {
      acc += w[i] * (f(c - r * x[i]) + f(c + r * x[i]));
    }
  }
  return r * acc;
}

void gl_panel(const VectorFn& f, double a, double b, std::span<double> out, std::vector<double>& scratch) {
  const auto& x = Gauss::abscissa();
  const auto& w = Gauss::weights();
  const double c = 0.5 * (a + b);
  const double r = 0.5 * (b - a);
  std::fill(out.begin(), out.end(), 0.0);
  std::span<double> tmp(scratch);
  auto add = [&](double xi, double wi) {
    f(xi, tmp);
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += wi * tmp[k];
  };
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0.0) {
      add(c, w[i]);
    } else {
      add(c - r * x[i], w[i]);
      add(c + r * x[i], w[i]);
    }
  }
  for (double& v : out) v *= r;
}

double gl_adapt(const ScalarFn& f, double a, double b, double whole, double abs_tol, const QuadOptions& opt,
                int depth) {
  const double m = 0.5 * (a + b);
  const double left = gl_panel(f, a, m);
  const double right = gl_panel(f, m, b);
  const double refined = left + right;
  const double diff = std::abs(refined - whole);
  if (diff <= std::max(abs_tol, opt.rel_tol * std::abs(refined))) return refined;
  if (depth >= opt.max_depth) throw NumericalError("integrate_gl: refinement budget exhausted on [" + std::to_string(a) + ", " + std::to_string(b) + "]", diff);
  return gl_adapt(f, a, m, left, 0.5 * abs_tol, opt, depth + 1) +
         gl_adapt(f, m, b, right, 0.5 * abs_tol, opt, depth + 1);
}

void gl_adapt(const VectorFn& f, double a, double b, std::span<const double> whole, double abs_tol,
              const QuadOptions& opt, int depth, std::span<double> out) {
  const std::size_t n = out.size();
  std::vector<double> left(n), right(n), scratch(n);
  const double m = 0.5 * (a + b);
  gl_panel(f, a, m, left, scratch);
  gl_panel(f, m, b, right, scratch);
  double diff = 0.0;
  double mag = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double r = left[k] + right[k];
    diff = std::max(diff, std::abs(r - whole[k]));
    mag = std::max(mag, std::abs(r));
  }
  if (diff <= std::max(abs_tol, opt.rel_tol * mag)) {
    for (std::size_t k = 0; k < n; ++k) out[k] += left[k] + right[k];
    return;
  }
  if (depth >= opt.max_depth) throw NumericalError("integrate_gl: refinement budget exhausted on [" + std::to_string(a) + ", " + std::to_string(b) + "]", diff);
  gl_adapt(f, a, m, left, 0.5 * abs_tol, opt, depth + 1, out);
  gl_adapt(f, m, b, right, 0.5 * abs_tol, opt, depth + 1, out);
}

}  // namespace

double integrate_gl(const ScalarFn& f, double a, double b, const QuadOptions& opt) {
  if (a == b) return 0.0;
  return gl_adapt(f, a, b, gl_panel(f, a, b), opt.abs_tol, opt, 0);
}

void integrate_gl(const VectorFn& f, double a, double b, std::span<double> out, const QuadOptions& opt) {
  std::fill(out.begin(), out.end(), 0.0);
  if (a == b) return;
  std::vector<double> whole(out.size()), scratch(out.size());
  gl_panel(f, a, b, whole, scratch);
  gl_adapt(f, a, b, whole, opt.abs_tol, opt, 0, out);
}

double integrate_de(const ScalarFn& f, double a, double b, double rel_tol, double abs_tol) {
  if (a == b) return 0.0;
  double err = 0.0;
  double l1 = 0.0;
  double value = 0.0;
  if (std::isinf(b)) {
    boost::math::quadrature::exp_sinh<double> rule;
    auto g = [&](double t) { return f(a + t); };
    value = rule.integrate(g, rel_tol, &err, &l1);
  } else {
    boost::math::quadrature::tanh_sinh<double> rule;
    value = rule.integrate(f, a, b, rel_tol, &err, &l1);
  }
  if (!std::isfinite(value) || err > std::max({1e3 * rel_tol * l1, abs_tol, 1e-300}))
    throw NumericalError("integrate_de: tolerance not reached", err);
  return value;
}

double integrate_pieces(const ScalarFn& f, std::vector<double> breaks, double rel_tol, double abs_tol) {
  std::sort(breaks.begin(), breaks.end());
  if (breaks.empty()) return 0.0;
  // Breaks that differ by rounding only would leave a sliver the DE rule cannot resolve.
  constexpr double kMerge = 1e-12;
  std::vector<double> kept{breaks.front()};
  for (std::size_t i = 1; i < breaks.size(); ++i) {
    const double b = breaks[i];
    if (b - kept.back() > kMerge * std::max({std::abs(b), std::abs(kept.back()), 1e-300}))
      kept.push_back(b);
    else if (i + 1 == breaks.size() && kept.size() > 1)
      kept.back() = b;  // keep the true right end
  }
  breaks = std::move(kept);
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) acc += integrate_de(f, breaks[i], breaks[i + 1], rel_tol, abs_tol);
  return acc;
}

}  // namespace fdlap
