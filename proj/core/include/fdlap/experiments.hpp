#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fdlap/continuum.hpp"
#include "fdlap/rates.hpp"

namespace fdlap {

// Which comparison statement applies to U at order s: compare D_+^l of the discrete
// operator with the l-th derivative of the continuous one, expecting h^rate.
struct ComparisonCase {
  int l = 0;
  double rate = 0.0;
  std::string label;  // "i", "ii", "iii" or "iv"
};

// Throws ConfigError when no case applies (for example 2s >= alpha for a C^{0,alpha} U).
ComparisonCase comparison_case(const TestFunction& U, double s);

// l-th derivative of U as a TestFunction. l <= 1 needs U.derivative; cosines allow any l.
TestFunction derivative_of(const TestFunction& U, int l);

struct ComparisonResult {
  ComparisonCase kase;
  RateReport report;
};

// Sup-norm error of D_+^l (-Delta_h)^s (r_h U) - r_h((-Delta)^s U^{(l)}) over |hj| <= window.
// The h list must be strictly decreasing.
ComparisonResult run_comparison(const TestFunction& U, double s, const std::vector<double>& hs,
                                double window = 1.5, int threads = 1);

struct DirichletRun {
  RateReport report;              // error / R^{2s}
  std::vector<double> raw_error;  // sup over B_R^h of |u - r_h U|
  std::vector<int> iterations;
  std::vector<double> residual;
  std::vector<double> min_ritz;
  std::vector<double> exterior_ratio;  // sup_{|x| >= R} |U| R^{1-2s} / ||F||_inf
};

// R = 1.1 max(2 R0, h^{-alpha}) with R0 the support radius of F and alpha its Hölder exponent.
DirichletRun run_dirichlet_convergence(const TestFunction& F, double s, const std::vector<double>& hs,
                                       double tol = 1e-10, int threads = 1);

struct KernelCheck {
  std::string check;
  double s = 0.0;
  double h = 1.0;
  long m = 0;
  double value = 0.0;
  double reference = 0.0;
  double deviation = 0.0;  // relative
  double threshold = 0.0;
  bool pass = false;
};

// Closed form vs semigroup quadrature (m in [1, m_quad], plus m = 0 for the negative power
// when s < 1/2), vs the alternate product formula (|m| <= m_alt), the K(0) = 0 row, and the
// kernel sum identity at h = 1 and h = 1/4.
std::vector<KernelCheck> run_kernel_validation(const std::vector<double>& s_list, long m_quad = 100,
                                               long m_alt = 30);

struct InequalityReport {
  double s = 0.0;
  double p = 0.0;
  double q = 0.0;  // critical exponent p / (1 - 2sp)
  std::vector<double> h;
  std::vector<double> hls_ratio;  // max over the profile family, per h
  double hls_spread = 0.0;        // max/min - 1 over h
  std::vector<double> sobolev;    // one ratio per random function
  std::vector<double> poincare;
  double sobolev_spread = 0.0;    // max / median
  double poincare_spread = 0.0;
};

// HLS at the critical exponent on fixed smooth random profiles sampled at each h, and the
// Sobolev and Poincaré ratios over `samples` random compact grid functions.
InequalityReport run_inequalities(double s, double p, const std::vector<double>& hs, int samples,
                                  std::uint64_t seed);

struct ExtensionReport {
  double s = 0.0;
  double dtn_error = 0.0;  // sup |DtN limit - Gamma(1-s)/(4^{s-1/2} Gamma(s)) (-Delta_h)^s u|
  double ntd_error = 0.0;  // sup |NtD limit - 4^{s-1/2} Gamma(s)/Gamma(1-s) (-Delta_h)^{-s} f|
};

// Both extension limits on delta data at h = 1 over |j| <= half_width.
ExtensionReport run_extension(double s, long half_width = 4, double y = 1e-3);

}  // namespace fdlap
