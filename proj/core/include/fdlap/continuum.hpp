#pragma once

#include <cmath>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "fdlap/grid_function.hpp"

namespace fdlap {

// How U behaves far from the origin; drives the tail of the singular integral.
enum class Decay {
  compact,   // U = 0 for |x| > support
  gaussian,  // negligible beyond |x| = 40
  periodic,  // U(x) = cos(omega x + phase)
  constant,  // U constant on the whole line
  power,     // far_field(x) is exact to double precision for |x| >= far_radius
};

struct TestFunction {
  std::string id;
  std::string klass;
  std::function<double(double)> value;
  std::function<double(double)> derivative;         // may be empty
  std::function<double(double)> second_derivative;  // may be empty
  int k = 0;           // Hölder class C^{k,alpha}
  double alpha = 1.0;  // alpha in (0,1]
  double support = INFINITY;
  Decay decay = Decay::compact;
  std::vector<double> kinks;  // points where U fails to be analytic
  double omega = 0.0;
  double phase = 0.0;
  std::function<double(double)> far_field;
  double far_radius = INFINITY;

  double operator()(double x) const { return value(x); }
};

// exp(1 - 1/(1 - (x/rho)^2)) for |x| < rho, so bump(0) = 1.
double bump(double x, double rho = 1.0);

TestFunction cosine(double omega, double phase = 0.0);
TestFunction gaussian();
TestFunction smooth_bump();
// |x|^alpha bump(x): exact Hölder exponent alpha at 0.
TestFunction holder_bump(double alpha);
// |x|^{1+alpha} bump(x): C^{1,alpha} with the derivative Hölder exponent exact at 0.
TestFunction c1_holder_bump(double alpha);
TestFunction constant_function(double c = 1.0);

// cos, gauss, bump, holder-0.3, holder-0.6, holder-0.9, c1-0.3, c1-0.6, const.
std::vector<TestFunction> corpus();
// Throws ConfigError for an unknown id.
TestFunction corpus_entry(const std::string& id);

// (-Delta)^s U(x) = A_s int_0^inf (2U(x) - U(x+r) - U(x-r)) r^{-1-2s} dr.
// Throws ContractViolation unless k >= 1 or alpha > 2s.
double continuous_frac_laplacian(const TestFunction& U, double x, double s);

// U(x) = A_{-s} int F(y) |x-y|^{2s-1} dy for compactly supported F and s < 1/2.
double riesz_potential(const TestFunction& F, double x, double s);

// The Riesz potential as a TestFunction, with kinks inherited from F, Hölder exponent
// alpha_F + 2s and a multipole far field.
class RieszSolution {
public:
  RieszSolution(TestFunction F, double s);
  double s() const { return s_; }
  const TestFunction& source() const { return F_; }
  double operator()(double x) const;
  // A_{-s} ||F||_inf N_{s,R0}(x): the bound by the potential of the indicator of supp F.
  double envelope(double x) const;
  // A_{-s} int F.
  double mass() const;
  TestFunction as_test_function() const;

private:
  TestFunction F_;
  double s_;
  double sup_;
  std::vector<double> moments_;  // int F(y) y^k dy
  double far(double x) const;
};

// (r_h U)_j = U(hj) on the window.
GridFunction restrict_to_mesh(const TestFunction& U, double h, const Window& window);

}  // namespace fdlap
