#pragma once

#include <cstddef>
#include <vector>

namespace fdlap {

enum class Power { positive, negative };

// Throws DomainError unless 0 < s < 1 (positive) or 0 < s < 1/2 (negative).
void check_order(double s, Power power);

// A_s for the positive power, A_{-s} for the negative power.
double constant_A(double s, Power power);

// K_s^h(m) or K_{-s}^h(m) by the Gamma-ratio closed form. K_s^h(0) = 0.
double kernel_value(double s, double h, long m, Power power);

// K_s^1(m), m != 0, from the generalized binomial form (-1)^{m+1} Gamma(2s+1) / (Gamma(1+s+m) Gamma(1+s-m)).
double kernel_value_alt(double s, long m);

// The same kernels as integrals of the heat kernel against t^{-1-s} or t^{s-1}.
double kernel_by_quadrature(double s, double h, long m, Power power, double rel_tol = 1e-12);

// Sigma_s^h = sum over m of K_s^h(m).
double kernel_sum(double s, double h);

// sum_{|m| > M} K_s^h(m), exact by telescoping of the Gamma ratio.
double kernel_tail_mass(double s, double h, long M);

// Symmetric kernel table. Values up to the dense limit are stored; beyond that and up
// to the radius they are evaluated on demand, so a large radius costs no memory.
class KernelTable {
public:
  static constexpr long kDenseLimit = 1L << 20;

  KernelTable(double s, double h, Power power, long radius, double tail_constant);

  double s() const { return s_; }
  double h() const { return h_; }
  Power power() const { return power_; }
  long radius() const { return radius_; }
  // Coefficient c of the tail model c * h^{-+2s} |m|^{-(1 +- 2s)}.
  double tail_constant() const { return tail_constant_; }

  // K(|m|); m beyond the radius is a contract violation.
  double operator()(long m) const;

  // Upper model for the neglected mass beyond the radius (positive power) or for the
  // largest neglected kernel value (negative power).
  double tail_bound() const;

private:
  double s_;
  double h_;
  Power power_;
  long radius_;
  double tail_constant_;
  std::vector<double> dense_;
};

inline constexpr long kDefaultRadiusCap = 1'000'000'000'000L;

// Radius chosen from the tail model so the neglected part is below tail_tol.
KernelTable build_table(double s, double h, Power power, double tail_tol, long radius_cap = kDefaultRadiusCap);

// Table with an explicit radius.
KernelTable table_with_radius(double s, double h, Power power, long radius);

struct JumpLaw {
  double s = 0.0;
  long radius = 0;
  std::vector<double> p;  // p[m] = P_s(m) = P_s(-m), 0 <= m <= radius
  double mass = 0.0;      // sum over |m| <= radius
  double tail = 0.0;      // exact mass beyond the radius
};

JumpLaw jump_law(double s, long radius);

// d^k/dr^k of H_s(r) = int_0^inf e^{-(r+s)v} (1-e^{-v})^{-2s} dv, k in {0,1,2}.
double h_s_function(double s, double r, int k);

}  // namespace fdlap
