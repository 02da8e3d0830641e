#include "fdlap/dirichlet.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numeric>

#include "fdlap/errors.hpp"
#include "fdlap/operators.hpp"

namespace fdlap {
namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

double smallest_ritz(const std::vector<double>& alpha, const std::vector<double>& beta, double sigma) {
  const auto n = static_cast<Eigen::Index>(alpha.size());
  if (n == 0) return 0.0;
  Eigen::VectorXd diag(n);
  Eigen::VectorXd off(std::max<Eigen::Index>(n - 1, 0));
  // Lanczos matrix of the preconditioned operator A / sigma.
  for (Eigen::Index k = 0; k < n; ++k) {
    diag(k) = 1.0 / alpha[static_cast<std::size_t>(k)];
    if (k > 0) diag(k) += beta[static_cast<std::size_t>(k - 1)] / alpha[static_cast<std::size_t>(k - 1)];
    if (k + 1 < n) off(k) = std::sqrt(beta[static_cast<std::size_t>(k)]) / alpha[static_cast<std::size_t>(k)];
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, off, Eigen::EigenvaluesOnly);
  return sigma * es.eigenvalues().minCoeff();
}

}  // namespace

Window ball_window(double R, double h) {
  if (!(h > 0.0)) throw DomainError("ball_window: h must be positive");
  if (!(R > h)) throw DomainError("ball_window: R must exceed h, the interior would be empty");
  const long J = static_cast<long>(std::ceil(R / h)) - 1;
  return {-J, J};
}

DirichletSystem assemble(double s, double h, double R, const GridFunction& f, const ExteriorDatum& g,
                         const KernelTable& table, ConvPath path) {
  check_order(s, Power::positive);
  if (table.power() != Power::positive || table.s() != s || table.h() != h)
    throw ContractViolation("assemble: kernel table does not match (s, h)");
  if (f.h() != h) throw ContractViolation("assemble: source uses a different h");
  DirichletSystem sys;
  sys.s = s;
  sys.h = h;
  sys.R = R;
  sys.interior = ball_window(R, h);
  sys.g = g;
  sys.sigma = kernel_sum(s, h);
  const long n = sys.interior.size();
  if (n - 1 > table.radius()) throw ContractViolation("assemble: table radius shorter than the ball diameter");
  std::vector<double> column(static_cast<std::size_t>(n));
  for (long m = 0; m < n; ++m) column[static_cast<std::size_t>(m)] = table(m);
  sys.toeplitz = std::make_shared<const SymmetricToeplitz>(std::move(column), path);
  sys.f.resize(static_cast<std::size_t>(n));
  for (long j = sys.interior.first; j <= sys.interior.last; ++j)
    sys.f[static_cast<std::size_t>(j - sys.interior.first)] = f.at(j);
  sys.rhs = sys.f;
  if (g.constant != 0.0) {
    // sum over exterior m of K(j - m), split into the two half-lines, each exact.
    for (long j = sys.interior.first; j <= sys.interior.last; ++j) {
      const double left = 0.5 * kernel_tail_mass(s, h, j - sys.interior.first);
      const double right = 0.5 * kernel_tail_mass(s, h, sys.interior.last - j);
      sys.rhs[static_cast<std::size_t>(j - sys.interior.first)] += g.constant * (left + right);
    }
  }
  if (g.compact) {
    const GridFunction& gc = *g.compact;
    if (gc.h() != h) throw ContractViolation("assemble: exterior datum uses a different h");
    for (long m = gc.first(); m <= gc.last(); ++m) {
      const double gm = gc.at(m);
      if (gm == 0.0 || sys.interior.contains(m)) continue;
      for (long j = sys.interior.first; j <= sys.interior.last; ++j)
        sys.rhs[static_cast<std::size_t>(j - sys.interior.first)] += table(j - m) * gm;
    }
  }
  return sys;
}

std::vector<double> matvec(const DirichletSystem& sys, const std::vector<double>& x) {
  if (static_cast<long>(x.size()) != sys.size()) throw ContractViolation("matvec: vector length differs from N");
  std::vector<double> y(x.size());
  sys.toeplitz->apply(x, y);
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = sys.sigma * x[i] - y[i];
  return y;
}

SolveReport solve(const DirichletSystem& sys, double tol, int max_iter, const std::vector<double>* x0) {
  if (!(tol > 0.0)) throw ContractViolation("solve: tol must be positive");
  const std::size_t n = static_cast<std::size_t>(sys.size());
  SolveReport rep;
  rep.x.assign(n, 0.0);
  if (x0) {
    if (x0->size() != n) throw ContractViolation("solve: initial guess has the wrong length");
    rep.x = *x0;
  }
  const double bnorm = std::sqrt(dot(sys.rhs, sys.rhs));
  std::vector<double> r = sys.rhs;
  if (bnorm == 0.0) {
    rep.x.assign(n, 0.0);
  } else {
    const auto ax = matvec(sys, rep.x);
    for (std::size_t i = 0; i < n; ++i) r[i] -= ax[i];
    const double inv_diag = 1.0 / sys.sigma;
    std::vector<double> z(n), p(n);
    for (std::size_t i = 0; i < n; ++i) z[i] = inv_diag * r[i];
    p = z;
    double rz = dot(r, z);
    std::vector<double> alphas, betas;
    int it = 0;
    double res = std::sqrt(dot(r, r)) / bnorm;
    while (res > tol) {
      if (it >= max_iter)
        throw NumericalError("solve: conjugate gradients did not converge within max_iter", res);
      const auto ap = matvec(sys, p);
      const double pap = dot(p, ap);
      if (!(pap > 0.0)) throw NumericalError("solve: operator is not positive definite on the iterate", res);
      const double alpha = rz / pap;
      for (std::size_t i = 0; i < n; ++i) {
        rep.x[i] += alpha * p[i];
        r[i] -= alpha * ap[i];
        z[i] = inv_diag * r[i];
      }
      const double rz_new = dot(r, z);
      const double beta = rz_new / rz;
      alphas.push_back(alpha);
      betas.push_back(beta);
      rz = rz_new;
      for (std::size_t i = 0; i < n; ++i) p[i] = z[i] + beta * p[i];
      ++it;
      res = std::sqrt(dot(r, r)) / bnorm;
      if (res <= tol) {
        // The recursive residual drifts; confirm against the true one.
        const auto axn = matvec(sys, rep.x);
        double true_sq = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
          r[i] = sys.rhs[i] - axn[i];
          true_sq += r[i] * r[i];
        }
        res = std::sqrt(true_sq) / bnorm;
        if (res > tol) {
          for (std::size_t i = 0; i < n; ++i) z[i] = inv_diag * r[i];
          p = z;
          rz = dot(r, z);
        }
      }
    }
    rep.iterations = it;
    rep.min_ritz = smallest_ritz(alphas, betas, sys.sigma);
  }
  {
    const auto ax = matvec(sys, rep.x);
    double sq = 0.0;
    for (std::size_t i = 0; i < n; ++i) sq += (sys.rhs[i] - ax[i]) * (sys.rhs[i] - ax[i]);
    rep.residual = bnorm == 0.0 ? std::sqrt(sq) : std::sqrt(sq) / bnorm;
  }
  Window w = sys.interior;
  if (sys.g.compact) w = hull(w, sys.g.compact->window());
  GridFunction sol(sys.h, w);
  if (sys.g.compact)
    for (long m = sys.g.compact->first(); m <= sys.g.compact->last(); ++m)
      if (!sys.interior.contains(m)) sol.ref(m) = sys.g.compact->at(m);
  for (long j = sys.interior.first; j <= sys.interior.last; ++j)
    sol.ref(j) = rep.x[static_cast<std::size_t>(j - sys.interior.first)];
  rep.solution = std::move(sol);
  return rep;
}

GridFunction barrier(double R, double h) {
  const Window w = ball_window(R, h);
  GridFunction out(h, w);
  for (long j = w.first; j <= w.last; ++j) {
    const double x = h * static_cast<double>(j);
    out.ref(j) = 4.0 * R * R - x * x;
  }
  return out;
}

MaxPrincipleReport max_principle_check(const GridFunction& u, const KernelTable& table, const Window& window,
                                       double sign_tol) {
  const GridFunction lu = frac_laplacian(u, table, window);
  MaxPrincipleReport rep;
  rep.subsolution = true;
  rep.supersolution = true;
  for (double v : lu.values()) {
    if (v > sign_tol) rep.subsolution = false;
    if (v < -sign_tol) rep.supersolution = false;
  }
  rep.max_inside = -INFINITY;
  rep.min_inside = INFINITY;
  for (long j = window.first; j <= window.last; ++j) {
    rep.max_inside = std::max(rep.max_inside, u.at(j));
    rep.min_inside = std::min(rep.min_inside, u.at(j));
  }
  // A compact u vanishes on all but finitely many exterior points.
  rep.sup_outside = 0.0;
  rep.inf_outside = 0.0;
  for (long j = u.first(); j <= u.last(); ++j) {
    if (window.contains(j)) continue;
    rep.sup_outside = std::max(rep.sup_outside, u.at(j));
    rep.inf_outside = std::min(rep.inf_outside, u.at(j));
  }
  rep.holds = true;
  if (rep.subsolution && rep.max_inside > rep.sup_outside) rep.holds = false;
  if (rep.supersolution && rep.min_inside < rep.inf_outside) rep.holds = false;
  return rep;
}

double apriori_constant(const GridFunction& u, double f_sup, double g_sup, double R, double s) {
  if (!(f_sup > 0.0)) throw ContractViolation("apriori_constant: ||f|| must be positive");
  return (u.norm_inf() - g_sup) / (std::pow(R, 2.0 * s) * f_sup);
}

}  // namespace fdlap
