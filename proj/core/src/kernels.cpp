#include "fdlap/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fdlap/errors.hpp"
#include "fdlap/quadrature.hpp"
#include "fdlap/specialfn.hpp"

namespace fdlap {
namespace {

const double kSqrtPi = std::sqrt(std::numbers::pi);

// Leading Hankel coefficients of G(m, r) ~ (4 pi r)^{-1/2} sum_j c_j r^{-j}.
std::vector<double> hankel_coefficients(long m, int terms) {
  const double mu = 4.0 * static_cast<double>(m) * static_cast<double>(m);
  std::vector<double> c(static_cast<std::size_t>(terms));
  double a = 1.0;
  for (int j = 0; j < terms; ++j) {
    if (j > 0) {
      const double odd = 2.0 * j - 1.0;
      a *= -(mu - odd * odd) / (8.0 * j);
    }
    c[static_cast<std::size_t>(j)] = a / std::pow(2.0, j);  // argument of I_m is 2r
  }
  return c;
}

}  // namespace

void check_order(double s, Power power) {
  const double upper = power == Power::positive ? 1.0 : 0.5;
  if (!(s > 0.0 && s < upper))
    throw DomainError(power == Power::positive ? "fractional order must lie in (0,1)"
                                               : "negative power requires 0 < s < 1/2");
}

double constant_A(double s, Power power) {
  check_order(s, power);
  if (power == Power::positive) {
    // |Gamma(-s)| = Gamma(1-s)/s.
    return s * std::exp(s * std::log(4.0) + log_gamma(0.5 + s) - log_gamma(1.0 - s)) / kSqrtPi;
  }
  return std::exp(-s * std::log(4.0) + log_gamma(0.5 - s) - log_gamma(s)) / kSqrtPi;
}

double kernel_value(double s, double h, long m, Power power) {
  if (!(h > 0.0)) throw DomainError("mesh size must be positive");
  const double a = constant_A(s, power);
  const double n = static_cast<double>(std::abs(m));
  if (power == Power::positive) {
    if (m == 0) return 0.0;
    return a * std::pow(h, -2.0 * s) * gamma_ratio(n, -s, 1.0 + s);
  }
  return a * std::pow(h, 2.0 * s) * gamma_ratio(n, s, 1.0 - s);
}

double kernel_value_alt(double s, long m) {
  check_order(s, Power::positive);
  if (m == 0) throw DomainError("kernel_value_alt: m must be nonzero");
  m = std::abs(m);
  // Gamma(1+s+m) = Gamma(1+s) prod (s+i) and 1/Gamma(1+s-m) = prod (1+s-i) / Gamma(1+s).
  double prod = 1.0;
  for (long i = 1; i <= m; ++i) {
    const double di = static_cast<double>(i);
    prod *= (1.0 + s - di) / (s + di);
  }
  const double g = std::tgamma(1.0 + s);
  const double sign = (m % 2 == 1) ? 1.0 : -1.0;  // (-1)^{m+1}
  return sign * std::tgamma(2.0 * s + 1.0) / (g * g) * prod;
}

double kernel_by_quadrature(double s, double h, long m, Power power, double rel_tol) {
  check_order(s, power);
  if (!(h > 0.0)) throw DomainError("mesh size must be positive");
  m = std::abs(m);
  if (power == Power::positive && m == 0)
    throw DomainError("kernel_by_quadrature: the positive-power integral diverges at m = 0");
  const double beta = power == Power::positive ? -1.0 - s : s - 1.0;
  auto integrand = [&](double r) { return heat_kernel(m, r) * std::pow(r, beta); };
  QuadOptions opt;
  opt.abs_tol = 0.0;
  opt.rel_tol = rel_tol;

  double total = 0.0;
  // [0, 1] on dyadic panels toward 0 until they stop contributing (at most down to 2^-60);
  // below the last panel G(m,r) ~ r^m/m!.
  constexpr int kInner = 60;
  const double dm = static_cast<double>(m);
  double r0 = 1.0;
  for (int i = 1; i <= kInner; ++i) {
    const double lo = std::ldexp(1.0, -i);
    const double p = integrate_gl(integrand, lo, r0, opt);
    total += p;
    r0 = lo;
    if (std::abs(p) < 1e-18 * std::abs(total)) break;
  }
  total += std::exp((dm + beta + 1.0) * std::log(r0) - log_gamma(dm + 1.0)) / (dm + beta + 1.0);

  // [1, R] on dyadic panels, R >= 1e4 max(1, m^2) so the Hankel tail is accurate.
  const double rend = 1e4 * std::max(1.0, dm * dm);
  double a = 1.0;
  while (a < rend) {
    total += integrate_gl(integrand, a, 2.0 * a, opt);
    a *= 2.0;
  }
  // [R, inf): integrate the Hankel expansion term by term.
  const auto c = hankel_coefficients(m, 8);
  double tail = 0.0;
  for (std::size_t j = 0; j < c.size(); ++j) {
    const double e = beta + 0.5 - static_cast<double>(j);  // exponent after integration
    tail += c[j] * std::pow(a, e) / (-e);
  }
  total += tail / std::sqrt(4.0 * std::numbers::pi);

  if (power == Power::positive) {
    const double abs_gamma = std::tgamma(1.0 - s) / s;
    return std::pow(h, -2.0 * s) * total / abs_gamma;
  }
  return std::pow(h, 2.0 * s) * total / std::tgamma(s);
}

double kernel_sum(double s, double h) {
  check_order(s, Power::positive);
  if (!(h > 0.0)) throw DomainError("mesh size must be positive");
  return std::exp(s * std::log(4.0) + log_gamma(0.5 + s) - log_gamma(1.0 + s)) / (kSqrtPi * std::pow(h, 2.0 * s));
}

double kernel_tail_mass(double s, double h, long M) {
  check_order(s, Power::positive);
  if (M < 0) throw ContractViolation("kernel_tail_mass: M must be >= 0");
  // 2s Gamma(m-s)/Gamma(m+1+s) = Gamma(m-s)/Gamma(m+s) - Gamma(m+1-s)/Gamma(m+1+s).
  const double one_side = gamma_ratio(static_cast<double>(M) + 1.0, -s, s) / (2.0 * s);
  return 2.0 * constant_A(s, Power::positive) * std::pow(h, -2.0 * s) * one_side;
}

KernelTable::KernelTable(double s, double h, Power power, long radius, double tail_constant)
    : s_(s), h_(h), power_(power), radius_(radius), tail_constant_(tail_constant) {
  check_order(s, power);
  if (!(h > 0.0)) throw DomainError("mesh size must be positive");
  if (radius < 1) throw ContractViolation("KernelTable: radius must be >= 1");
  const long dense = std::min(radius, kDenseLimit);
  dense_.resize(static_cast<std::size_t>(dense) + 1);
  for (long m = 0; m <= dense; ++m) dense_[static_cast<std::size_t>(m)] = kernel_value(s, h, m, power);
}

double KernelTable::operator()(long m) const {
  m = std::abs(m);
  if (m < static_cast<long>(dense_.size())) return dense_[static_cast<std::size_t>(m)];
  if (m > radius_) throw ContractViolation("KernelTable: offset beyond the table radius");
  return kernel_value(s_, h_, m, power_);
}

double KernelTable::tail_bound() const {
  const double M = static_cast<double>(radius_);
  if (power_ == Power::positive) return tail_constant_ * std::pow(h_, -2.0 * s_) / (s_ * std::pow(M, 2.0 * s_));
  return tail_constant_ * std::pow(h_, 2.0 * s_) * std::pow(M, 2.0 * s_ - 1.0);
}

namespace {

// Largest normalized value K * h^{+-2s} * m^{1 +- 2s} over a sample of [lo, hi].
double fitted_constant(double s, Power power, long lo, long hi) {
  const double p = power == Power::positive ? 1.0 + 2.0 * s : 1.0 - 2.0 * s;
  double c = 0.0;
  const long step = std::max<long>(1, (hi - lo) / 64);
  for (long m = std::max<long>(lo, 1); m <= hi; m += step)
    c = std::max(c, kernel_value(s, 1.0, m, power) * std::pow(static_cast<double>(m), p));
  return c;
}

}  // namespace

KernelTable build_table(double s, double h, Power power, double tail_tol, long radius_cap) {
  check_order(s, power);
  if (!(tail_tol > 0.0)) throw ContractViolation("build_table: tail_tol must be positive");
  if (!(h > 0.0)) throw DomainError("mesh size must be positive");
  constexpr double kSafety = 2.0;
  const double c0 = kSafety * std::max(fitted_constant(s, power, 1, 10), constant_A(s, power));
  double radius = 0.0;
  if (power == Power::positive) {
    // c0 h^{-2s} / (s M^{2s}) <= tol.
    radius = std::pow(c0 / (s * tail_tol * std::pow(h, 2.0 * s)), 1.0 / (2.0 * s));
  } else {
    // c0 h^{2s} M^{2s-1} <= tol.
    radius = std::pow(c0 * std::pow(h, 2.0 * s) / tail_tol, 1.0 / (1.0 - 2.0 * s));
  }
  radius = std::max(std::ceil(radius), 1.0);
  if (!(radius <= static_cast<double>(radius_cap))) {
    const double cap = static_cast<double>(radius_cap);
    const double achievable = power == Power::positive ? c0 / (s * std::pow(h, 2.0 * s) * std::pow(cap, 2.0 * s))
                                                       : c0 * std::pow(h, 2.0 * s) * std::pow(cap, 2.0 * s - 1.0);
    throw NumericalError("build_table: tail tolerance needs a radius beyond the cap", achievable);
  }
  const long M = static_cast<long>(radius);
  const double fit = kSafety * fitted_constant(s, power, std::max<long>(1, M / 10), M);
  return KernelTable(s, h, power, M, fit);
}

KernelTable table_with_radius(double s, double h, Power power, long radius) {
  check_order(s, power);
  const double fit = 2.0 * fitted_constant(s, power, std::max<long>(1, radius / 10), std::max<long>(1, radius));
  return KernelTable(s, h, power, radius, fit);
}

JumpLaw jump_law(double s, long radius) {
  check_order(s, Power::positive);
  if (radius < 1) throw ContractViolation("jump_law: radius must be >= 1");
  JumpLaw law;
  law.s = s;
  law.radius = radius;
  law.p.resize(static_cast<std::size_t>(radius) + 1);
  const double sigma = kernel_sum(s, 1.0);
  double mass = 0.0;
  for (long m = radius; m >= 1; --m) {
    law.p[static_cast<std::size_t>(m)] = kernel_value(s, 1.0, m, Power::positive) / sigma;
    mass += 2.0 * law.p[static_cast<std::size_t>(m)];
  }
  law.p[0] = 0.0;
  law.mass = mass;
  law.tail = kernel_tail_mass(s, 1.0, radius) / sigma;
  return law;
}

double h_s_function(double s, double r, int k) {
  check_order(s, Power::negative);
  if (!(r > 0.0)) throw DomainError("h_s_function: r must be positive");
  if (k < 0 || k > 2) throw ContractViolation("h_s_function: derivative order must be 0, 1 or 2");
  const double c = r + s;
  // w = (r+s) v puts the exponential decay on the unit scale.
  auto f = [&](double w) {
    const double base = -std::expm1(-w / c);
    return std::exp(-w) * std::pow(base, -2.0 * s) * std::pow(w, k);
  };
  const double integral = integrate_de(f, 0.0, 1.0) + integrate_de(f, 1.0, INFINITY);
  const double sign = (k % 2 == 0) ? 1.0 : -1.0;
  return sign * integral / std::pow(c, 1.0 + k);
}

}  // namespace fdlap
