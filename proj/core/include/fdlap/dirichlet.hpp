#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "fdlap/grid_function.hpp"
#include "fdlap/kernels.hpp"
#include "fdlap/toeplitz.hpp"

namespace fdlap {

// Exterior datum: a constant plus a finitely supported part. Values of `compact`
// inside the ball are ignored.
struct ExteriorDatum {
  double constant = 0.0;
  std::optional<GridFunction> compact;
};

// Restricted operator on B_R^h = {j : |hj| < R}: A = Sigma_s^h I - T, T_{jm} = K_s^h(j-m).
struct DirichletSystem {
  double s = 0.0;
  double h = 0.0;
  double R = 0.0;
  Window interior;
  double sigma = 0.0;
  std::vector<double> f;    // source on the interior
  std::vector<double> rhs;  // f plus the exterior contribution
  ExteriorDatum g;
  std::shared_ptr<const SymmetricToeplitz> toeplitz;

  long size() const { return interior.size(); }
};

// Index window of B_R^h. Throws DomainError when R <= h.
Window ball_window(double R, double h);

// f is sampled on the interior (values outside its window count as zero). The table must
// match (s, h) and reach every offset between the interior and supp(g.compact).
DirichletSystem assemble(double s, double h, double R, const GridFunction& f, const ExteriorDatum& g,
                         const KernelTable& table, ConvPath path = ConvPath::automatic);

// Sigma x - T x.
std::vector<double> matvec(const DirichletSystem& sys, const std::vector<double>& x);

struct SolveReport {
  int iterations = 0;
  double residual = 0.0;   // ||b - A x|| / ||b||, recomputed from the returned x
  double min_ritz = 0.0;   // smallest Ritz value of A from the CG tridiagonalization
  std::vector<double> x;   // interior values
  GridFunction solution;   // interior values extended by g.compact outside (g.constant not stored)
};

// Jacobi-preconditioned conjugate gradients. Throws NumericalError carrying the last
// relative residual when max_iter is reached.
SolveReport solve(const DirichletSystem& sys, double tol = 1e-10, int max_iter = 5000,
                  const std::vector<double>* x0 = nullptr);

// W(hj) = 4R^2 - (hj)^2 for |hj| < R, zero elsewhere.
GridFunction barrier(double R, double h);

struct MaxPrincipleReport {
  bool subsolution = false;    // (-Delta_h)^s u <= 0 on the window
  bool supersolution = false;  // (-Delta_h)^s u >= 0 on the window
  bool holds = true;           // every applicable principle holds
  double max_inside = 0.0;
  double sup_outside = 0.0;    // includes the zero tail of a compact u
  double min_inside = 0.0;
  double inf_outside = 0.0;
};

// Computes (-Delta_h)^s u on the window and checks max_B u <= sup_{Z \ B} u for
// subsolutions and min_B u >= inf_{Z \ B} u for supersolutions. The sign tests allow
// |(-Delta_h)^s u| <= sign_tol.
MaxPrincipleReport max_principle_check(const GridFunction& u, const KernelTable& table, const Window& window,
                                       double sign_tol = 0.0);

// (||u||_inf - ||g||_inf) / (R^{2s} ||f||_inf), the constant of the a-priori bound.
double apriori_constant(const GridFunction& u, double f_sup, double g_sup, double R, double s);

}  // namespace fdlap
