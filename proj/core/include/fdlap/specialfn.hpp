#pragma once

#include <vector>

namespace fdlap {

// ln Gamma(x) for x > 0. Throws DomainError for x <= 0 or non-finite x.
double log_gamma(double x);

// Gamma(z+a)/Gamma(z+b) without forming either Gamma. Requires z+a > 0 and z+b > 0.
double gamma_ratio(double z, double a, double b);

// exp(-t) I_|k|(t), t >= 0.
double bessel_i_scaled(long k, double t);

// exp(-t) I_k(t) for k = 0..kmax in one pass.
std::vector<double> bessel_i_scaled_orders(double t, long kmax);

// G(m, t) = exp(-2t) I_m(2t), the kernel of exp(t Delta_1) on Z.
double heat_kernel(long m, double t);

// G(0..mmax, t).
std::vector<double> heat_kernel_orders(double t, long mmax);

// Smallest M with sum_{|m| > M} G(m, t) <= tail (Bennett bound on the walk).
long heat_kernel_radius(double t, double tail);

namespace detail {
// Individual Bessel regimes, exposed for cross-regime tests.
double bessel_series(long k, double x);
double bessel_miller(long k, double x);
double bessel_debye(long k, double x);
double bessel_hankel(long k, double x);
// True when the Hankel large-argument expansion converges to double precision.
bool hankel_applicable(long k, double x);
}  // namespace detail

}  // namespace fdlap
