#pragma once

#include <optional>
#include <vector>

#include "fdlap/grid_function.hpp"
#include "fdlap/kernels.hpp"
#include "fdlap/toeplitz.hpp"

namespace fdlap {

// -Delta_h u, i.e. (2u_j - u_{j+1} - u_{j-1}) / h^2. Support grows by one on each side.
GridFunction discrete_laplacian(const GridFunction& u);

// Default output window of frac_laplacian: supp(u) dilated by #supp, or less when the
// kernel offsets would leave the table radius.
Window default_window(const GridFunction& u, const KernelTable& table);

// (-Delta_h)^s u_j = Sigma_s^h u_j - sum_{m != j} K_s^h(j-m) u_m on the window.
// Every kernel offset the window needs must lie within the table radius.
GridFunction frac_laplacian(const GridFunction& u, const KernelTable& table, std::optional<Window> window = {},
                            ConvPath path = ConvPath::automatic);

// (-Delta_h)^{-s} f_j = sum_m K_{-s}^h(j-m) f_m on the window.
GridFunction frac_integral(const GridFunction& f, const KernelTable& table, const Window& window,
                           ConvPath path = ConvPath::automatic);

// (-Delta_h)^s applied to cos(omega x + phase) sampled on Z_h, evaluated by summing the
// kernel series to its exact tail. The result is m_s(omega h) times the samples.
GridFunction frac_laplacian_cosine(double omega, double phase, double s, double h, const Window& window);

// exp(t Delta_h) u; kernel truncated where the neglected heat-kernel mass is below 1e-14.
GridFunction heat_semigroup(const GridFunction& u, double t);

// The semigroup integral definition of (-Delta_h)^s, by quadrature in t.
GridFunction frac_laplacian_by_semigroup(const GridFunction& u, double s, const Window& window,
                                         double rel_tol = 1e-11);

// The semigroup integral definition of (-Delta_h)^{-s}, by quadrature in t.
GridFunction frac_integral_by_semigroup(const GridFunction& f, double s, const Window& window,
                                        double rel_tol = 1e-11);

// (-Delta_h)^s u from the Fourier multiplier (4/h^2 sin^2(theta/2))^s, 0 < s <= 1.
GridFunction multiplier_oracle(const GridFunction& u, double s, const Window& window);

enum class Direction { plus, minus };

// D_+ u_j = (u_{j+1} - u_j)/h, D_- u_j = (u_j - u_{j-1})/h.
GridFunction discrete_derivative(const GridFunction& u, Direction dir);

struct HolderSeminorm {
  int k = 0;
  double alpha = 1.0;
  double value = 0.0;
};

// max over gamma+eta = k of sup_{j != m} |D_+^gamma D_-^eta u_j - (same)_m| / |hj - hm|^alpha,
// over the stored window only; each difference shrinks it by one point. Pass u.on(w.dilate(k + 1))
// to include the implicit zeros around a compact u.
HolderSeminorm holder_seminorm(const GridFunction& u, int k, double alpha);

// h/2 sum_j sum_{m != j} (u_j - u_m)(v_j - v_m) K_s^h(j-m) summed over all of Z.
double bilinear_form(const GridFunction& u, const GridFunction& v, const KernelTable& table);

struct InequalityCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;  // lhs / rhs, defined as 0 when both vanish
};

struct SobolevPoincare {
  InequalityCheck sobolev;   // ||u||_{l^{2/(1-2s)}} vs ||(-Delta_h)^{s/2} u||
  InequalityCheck poincare;  // ||u||_{l^2} vs h^s (#supp)^s ||(-Delta_h)^{s/2} u||
};

SobolevPoincare sobolev_poincare_check(const GridFunction& u, const KernelTable& table);

// Shared engine for the semigroup integrals. For each a in `decay` and j in the window
// returns int_0^inf tau^beta exp(-a/tau) [exp(tau Delta_1) u - c u]_j dtau, c = 1 when
// `subtract`, else 0. Row k of the result belongs to decay[k].
std::vector<std::vector<double>> semigroup_integral(const GridFunction& u, const Window& window, double beta,
                                                    const std::vector<double>& decay, bool subtract,
                                                    double rel_tol = 1e-11);

}  // namespace fdlap
