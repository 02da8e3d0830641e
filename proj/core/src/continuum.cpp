#include "fdlap/continuum.hpp"

#include <algorithm>
#include <Eigen/Dense>
#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <complex>
#include <numbers>

#include "fdlap/errors.hpp"
#include "fdlap/kernels.hpp"
#include "fdlap/quadrature.hpp"

namespace fdlap {
namespace {

constexpr double kRelTol = 1e-12;
constexpr double kAbsTol = 1e-10;

double gl20(const std::function<double(double)>& f, double a, double b) {
  return boost::math::quadrature::gauss<double, 20>::integrate(f, a, b);
}

// int_L^inf cos(omega r) r^{-p} dr from the integration-by-parts series; needs omega L >> p.
double cosine_tail(double omega, double L, double p) {
  const std::complex<double> io(0.0, omega);
  std::complex<double> sum = 0.0;
  std::complex<double> term = std::pow(L, -p);
  for (int k = 0; k < 60; ++k) {
    sum += term;
    const std::complex<double> next = term * (p + k) / (io * L);
    if (std::abs(next) < 1e-18 * std::abs(sum)) break;
    term = next;
  }
  return (-std::exp(io * L) / io * sum).real();
}

// int_0^{r1} N(r) r^{-1-2s} dr when x sits on a kink. Dyadic panels toward 0, each one
// exact to rounding with a single 20-point rule; the remainder follows the observed
// geometric decay of the panel integrals. Descent stops once N is lost in cancellation.
double near_kink(const std::function<double(double)>& N, double s, double r1, double ux, double eps) {
  auto integrand = [&](double r) { return N(r) * std::pow(r, -1.0 - 2.0 * s); };
  double total = 0.0;
  double prev = NAN;
  double prev_ratio = NAN;
  double rem = 0.0;
  double hi = r1;
  for (int i = 0; i < 1000 && hi > 1e-280; ++i) {
    const double lo = 0.5 * hi;
    const double p = gl20(integrand, lo, hi);
    total += p;
    if (p == 0.0) return total;
    if (std::isfinite(prev) && prev != 0.0) {
      const double ratio = p / prev;
      if (ratio > 0.0 && ratio < 1.0) {
        rem = p * ratio / (1.0 - ratio);
        const double drift = std::isfinite(prev_ratio) ? std::abs(ratio - prev_ratio) : 1.0;
        if (std::abs(rem) < eps) return total + rem;
        if (i >= 6 && std::abs(rem) * drift / (1.0 - ratio) < eps) return total + rem;
        if (i >= 6 && std::abs(N(lo)) < 1e-7 * std::abs(ux)) return total + rem;
      }
      prev_ratio = ratio;
    }
    prev = p;
    hi = lo;
  }
  throw NumericalError("continuous_frac_laplacian: P.V. integral near r = 0 did not settle", std::abs(rem));
}

// int_0^{rc} N(r) r^{-1-2s} dr at a smooth point: N is even in r, so N(r)/r^2 is fitted by a
// polynomial in r^2 on Chebyshev nodes and integrated term by term. rc is well inside the
// analyticity radius, and the smallest node keeps N far above rounding.
double near_smooth(const std::function<double(double)>& N, double s, double rc) {
  constexpr int kNodes = 24;
  constexpr int kDegree = 9;
  Eigen::MatrixXd V(kNodes, kDegree + 1);
  Eigen::VectorXd g(kNodes);
  for (int i = 0; i < kNodes; ++i) {
    const double t = 0.5 * (1.0 - std::cos(std::numbers::pi * (i + 0.5) / kNodes));  // (r/rc)^2
    const double r = rc * std::sqrt(t);
    g(i) = N(r) / (r * r);
    double tk = 1.0;
    for (int k = 0; k <= kDegree; ++k) {
      V(i, k) = tk;
      tk *= t;
    }
  }
  const Eigen::VectorXd c = V.colPivHouseholderQr().solve(g);
  // N(r) = sum_k c_k rc^{-2k} r^{2k+2}.
  double total = 0.0;
  for (int k = 0; k <= kDegree; ++k) {
    const double e = 2.0 * k + 2.0 - 2.0 * s;
    total += c(k) * std::pow(rc, 2.0 - 2.0 * s) / e;
  }
  return total;
}

}  // namespace

double continuous_frac_laplacian(const TestFunction& U, double x, double s) {
  check_order(s, Power::positive);
  if (!U.value) throw ContractViolation("continuous_frac_laplacian: test function has no evaluator");
  if (U.k == 0 && !(U.alpha > 2.0 * s))
    throw ContractViolation("continuous_frac_laplacian: needs alpha > 2s for a C^{0,alpha} function");
  if (U.decay == Decay::constant) return 0.0;
  const double ux = U(x);
  auto N = [&](double r) { return 2.0 * ux - U(x + r) - U(x - r); };
  auto integrand = [&](double r) { return N(r) * std::pow(r, -1.0 - 2.0 * s); };

  double L = 1.0;
  std::vector<double> breaks;
  bool on_kink = false;
  auto add_break = [&](double b) {
    if (b > 0.0) breaks.push_back(b);
    else on_kink = true;
  };
  for (double k : U.kinks) add_break(std::abs(x - k));
  switch (U.decay) {
    case Decay::compact:
      add_break(std::abs(x - U.support));
      add_break(std::abs(x + U.support));
      L = std::max(1.0, std::abs(x) + U.support);
      break;
    case Decay::gaussian:
      L = std::abs(x) + 40.0;
      for (double b = 1.0; b < L; b *= 2.0) add_break(b);
      break;
    case Decay::periodic: {
      L = std::max(2.0, 200.0 / U.omega);
      const double half = std::numbers::pi / U.omega;
      for (double b = half; b < L; b += half) add_break(b);
      break;
    }
    case Decay::power:
      if (!U.far_field || !std::isfinite(U.far_radius))
        throw ContractViolation("continuous_frac_laplacian: power decay needs a far-field model");
      L = std::abs(x) + std::max(1.0, U.far_radius);
      for (double b = 1.0; b < L; b *= 2.0) add_break(b);
      break;
    case Decay::constant:
      break;
  }
  double r1 = 1.0;
  for (double b : breaks) r1 = std::min(r1, b);
  std::vector<double> pieces{r1};
  for (double b : breaks)
    if (b > r1 && b < L) pieces.push_back(b);
  pieces.push_back(L);
  std::sort(pieces.begin(), pieces.end());
  pieces.erase(std::unique(pieces.begin(), pieces.end()), pieces.end());

  const double eps = 1e-14 * std::max(1.0, std::abs(ux));
  double total = 0.0;
  if (on_kink) {
    total += near_kink(N, s, r1, ux, eps);
  } else {
    // Polynomial model on [0, r1/8], dyadic panels on [r1/8, r1].
    const double rc = r1 / 8.0;
    total += near_smooth(N, s, rc);
    for (double a = rc; a < r1; a *= 2.0) total += gl20(integrand, a, std::min(2.0 * a, r1));
  }
  if (pieces.size() > 1) total += integrate_pieces(integrand, pieces, kRelTol, kAbsTol);

  const double two_s = 2.0 * s;
  const double mass = 2.0 * ux * std::pow(L, -two_s) / two_s;
  switch (U.decay) {
    case Decay::compact:
    case Decay::gaussian:
      total += mass;
      break;
    case Decay::periodic:
      // U(x+r) + U(x-r) = 2 U(x) cos(omega r).
      total += mass - 2.0 * ux * cosine_tail(U.omega, L, 1.0 + two_s);
      break;
    case Decay::power: {
      auto far = [&](double r) { return (U.far_field(x + r) + U.far_field(x - r)) * std::pow(r, -1.0 - two_s); };
      total += mass - integrate_de(far, L, INFINITY, kRelTol, kAbsTol);
      break;
    }
    case Decay::constant:
      break;
  }
  return constant_A(s, Power::positive) * total;
}

double riesz_potential(const TestFunction& F, double x, double s) {
  check_order(s, Power::negative);
  if (F.decay != Decay::compact || !std::isfinite(F.support))
    throw ContractViolation("riesz_potential: source must be compactly supported");
  const double rho = F.support;
  const double p = 2.0 * s - 1.0;
  const double A = constant_A(s, Power::negative);
  std::vector<double> breaks{-rho, rho};
  for (double k : F.kinks)
    if (k > -rho && k < rho) breaks.push_back(k);
  if (std::abs(x) < rho) {
    breaks.push_back(x);
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
    const double fx = F(x);
    auto g = [&](double y) {
      const double d = std::abs(x - y);
      return d == 0.0 ? 0.0 : (F(y) - fx) * std::pow(d, p);
    };
    const double analytic = fx * (std::pow(rho + x, 2.0 * s) + std::pow(rho - x, 2.0 * s)) / (2.0 * s);
    return A * (analytic + integrate_pieces(g, breaks, kRelTol, kAbsTol));
  }
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
  auto g = [&](double y) { return F(y) * std::pow(std::abs(x - y), p); };
  return A * integrate_pieces(g, breaks, kRelTol, kAbsTol);
}

namespace {
constexpr int kMoments = 17;
constexpr double kFarFactor = 20.0;
}  // namespace

RieszSolution::RieszSolution(TestFunction F, double s) : F_(std::move(F)), s_(s) {
  check_order(s, Power::negative);
  if (F_.decay != Decay::compact || !std::isfinite(F_.support))
    throw ContractViolation("RieszSolution: source must be compactly supported");
  const double rho = F_.support;
  std::vector<double> breaks{-rho, rho};
  for (double k : F_.kinks)
    if (k > -rho && k < rho) breaks.push_back(k);
  std::sort(breaks.begin(), breaks.end());
  moments_.resize(kMoments);
  for (int k = 0; k < kMoments; ++k)
    moments_[static_cast<std::size_t>(k)] =
        integrate_pieces([&](double y) { return F_(y) * std::pow(y, k); }, breaks, kRelTol);
  sup_ = 0.0;
  for (int i = 0; i <= 4000; ++i) sup_ = std::max(sup_, std::abs(F_(-rho + 2.0 * rho * i / 4000.0)));
}

double RieszSolution::far(double x) const {
  // |x - y|^p = |x|^p sum_k binom(p, k) (-y/x)^k.
  const double p = 2.0 * s_ - 1.0;
  double binom = 1.0;
  double xk = 1.0;
  double sum = 0.0;
  for (int k = 0; k < kMoments; ++k) {
    sum += binom * xk * moments_[static_cast<std::size_t>(k)];
    binom *= (p - k) / (k + 1.0);
    xk *= -1.0 / x;
  }
  return constant_A(s_, Power::negative) * std::pow(std::abs(x), p) * sum;
}

double RieszSolution::operator()(double x) const {
  if (std::abs(x) >= kFarFactor * F_.support) return far(x);
  return riesz_potential(F_, x, s_);
}

double RieszSolution::envelope(double x) const {
  const double r = F_.support;
  const double ax = std::abs(x);
  const double two_s = 2.0 * s_;
  const double n = ax < r ? (std::pow(r + ax, two_s) + std::pow(r - ax, two_s)) / two_s
                          : (std::pow(ax + r, two_s) - std::pow(ax - r, two_s)) / two_s;
  return constant_A(s_, Power::negative) * sup_ * n;
}

double RieszSolution::mass() const { return constant_A(s_, Power::negative) * moments_[0]; }

TestFunction RieszSolution::as_test_function() const {
  auto self = std::make_shared<const RieszSolution>(*this);
  TestFunction t;
  t.id = "riesz(" + F_.id + ")";
  t.klass = "riesz";
  t.value = [self](double x) { return (*self)(x); };
  const double a = F_.k == 0 ? F_.alpha + 2.0 * s_ : 1.0;
  t.k = a > 1.0 ? 1 : 0;
  t.alpha = a > 1.0 ? a - 1.0 : a;
  t.decay = Decay::power;
  t.kinks = F_.kinks;
  // U is smooth but not analytic where F stops being analytic.
  t.kinks.push_back(-F_.support);
  t.kinks.push_back(F_.support);
  t.far_field = [self](double x) { return self->far(x); };
  t.far_radius = kFarFactor * F_.support;
  return t;
}

GridFunction restrict_to_mesh(const TestFunction& U, double h, const Window& window) {
  if (window.size() <= 0) throw ContractViolation("restrict_to_mesh: empty window");
  GridFunction out(h, window);
  for (long j = window.first; j <= window.last; ++j) out.ref(j) = U(h * static_cast<double>(j));
  return out;
}

}  // namespace fdlap
