#pragma once

#include <functional>
#include <span>
#include <vector>

namespace fdlap {

using ScalarFn = std::function<double(double)>;
// Writes f(x) into the span (length fixed by the caller).
using VectorFn = std::function<void(double, std::span<double>)>;

struct QuadOptions {
  double abs_tol = 1e-12;
  double rel_tol = 1e-12;
  int max_depth = 40;
};

// Gauss-Legendre (20 nodes) with bisection until panel halves agree.
double integrate_gl(const ScalarFn& f, double a, double b, const QuadOptions& opt = {});

// Vector-valued version; `out` has the integrand dimension and receives the integral.
void integrate_gl(const VectorFn& f, double a, double b, std::span<double> out, const QuadOptions& opt = {});

// Double-exponential rule on [a, b]; tolerates integrable endpoint singularities.
// b may be +infinity. Fails when the error estimate exceeds both 1e3 rel_tol times the
// L1 norm and abs_tol.
double integrate_de(const ScalarFn& f, double a, double b, double rel_tol = 1e-12, double abs_tol = 0.0);

// Sum of integrate_de over the consecutive intervals of a sorted breakpoint list.
double integrate_pieces(const ScalarFn& f, std::vector<double> breaks, double rel_tol = 1e-12,
                        double abs_tol = 0.0);

}  // namespace fdlap
