#include <doctest.h>

#include <cmath>
#include <random>

#include "fdlap/dirichlet.hpp"
#include "fdlap/errors.hpp"
#include "fdlap/operators.hpp"

using namespace fdlap;

TEST_CASE("ball window") {
  CHECK(ball_window(1.0, 0.25) == Window{-3, 3});
  CHECK(ball_window(1.1, 0.25) == Window{-4, 4});
  CHECK_THROWS_AS(ball_window(0.2, 0.25), DomainError);
}

TEST_CASE("solution satisfies the equation inside and the datum outside") {
  const double s = 0.45;
  const double h = 0.125;
  const double R = 2.0;
  const Window B = ball_window(R, h);
  std::vector<double> f(static_cast<std::size_t>(B.size()));
  for (long j = B.first; j <= B.last; ++j) f[static_cast<std::size_t>(j - B.first)] = std::cos(h * j);
  ExteriorDatum g;
  std::vector<double> gv;
  for (long j = B.last + 1; j <= B.last + 8; ++j) gv.push_back(0.3 * std::sin(double(j)));
  g.compact = GridFunction(h, B.last + 1, gv);
  const KernelTable t = table_with_radius(s, h, Power::positive, 200);
  const DirichletSystem sys = assemble(s, h, R, GridFunction(h, B.first, f), g, t);
  const SolveReport rep = solve(sys, 1e-12);
  CHECK(rep.residual <= 1e-12);
  CHECK(rep.min_ritz > 0.0);
  const GridFunction lu = frac_laplacian(rep.solution, t, B);
  for (long j = B.first; j <= B.last; ++j) CHECK(std::abs(lu.at(j) - std::cos(h * j)) < 1e-9);
  CHECK(rep.solution.at(B.last + 3) == g.compact->at(B.last + 3));
}

TEST_CASE("a constant exterior datum is absorbed analytically") {
  // u = c solves the problem with f = 0 and g = c.
  const double s = 0.3;
  const double h = 0.25;
  const KernelTable t = table_with_radius(s, h, Power::positive, 100);
  ExteriorDatum g;
  g.constant = 2.5;
  const DirichletSystem sys = assemble(s, h, 3.0, GridFunction(h, Window{0, 0}), g, t);
  const SolveReport rep = solve(sys);
  for (double x : rep.x) CHECK(std::abs(x - 2.5) < 1e-9);
}

TEST_CASE("zero data give the zero solution") {
  const KernelTable t = table_with_radius(0.5, 0.5, Power::positive, 100);
  const DirichletSystem sys = assemble(0.5, 0.5, 4.0, GridFunction(0.5, Window{0, 0}), {}, t);
  const SolveReport rep = solve(sys);
  for (double x : rep.x) CHECK(x == 0.0);
}

TEST_CASE("matvec matches the dense operator") {
  const double s = 0.6;
  const double h = 0.5;
  const KernelTable t = table_with_radius(s, h, Power::positive, 100);
  const DirichletSystem sys = assemble(s, h, 5.0, GridFunction(h, Window{0, 0}), {}, t);
  std::vector<double> x(static_cast<std::size_t>(sys.size()));
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = std::sin(1.0 + 0.7 * i);
  const auto y = matvec(sys, x);
  for (long i = 0; i < sys.size(); ++i) {
    double ref = sys.sigma * x[static_cast<std::size_t>(i)];
    for (long k = 0; k < sys.size(); ++k)
      if (k != i) ref -= t(i - k) * x[static_cast<std::size_t>(k)];
    CHECK(std::abs(y[static_cast<std::size_t>(i)] - ref) < 1e-12);
  }
}

TEST_CASE("non-convergence is reported with the achieved residual") {
  const KernelTable t = table_with_radius(0.5, 0.1, Power::positive, 200);
  std::vector<double> f(200, 1.0);
  const DirichletSystem sys = assemble(0.5, 0.1, 10.0, GridFunction(0.1, -100, f), {}, t);
  CHECK_THROWS_AS(solve(sys, 1e-14, 2), NumericalError);
}

TEST_CASE("barrier and maximum principle") {
  for (double s : {0.2, 0.8}) {
    const double R = 2.0;
    const double h = 0.125;
    const GridFunction w = barrier(R, h);
    const Window B = ball_window(R, h);
    CHECK(w.at(0) == 4.0 * R * R);
    CHECK(w.at(B.last + 1) == 0.0);
    const KernelTable t = table_with_radius(s, h, Power::positive, 2 * B.size());
    const GridFunction lw = frac_laplacian(w, t, B);
    for (long j = B.first; j <= B.last; ++j) CHECK(lw.at(j) > 0.0);
    // A supersolution in B: its minimum inside is above the zero exterior.
    const MaxPrincipleReport rep = max_principle_check(w, t, B);
    CHECK(rep.supersolution);
    CHECK(rep.holds);
    CHECK(rep.min_inside >= rep.inf_outside);
  }
}

TEST_CASE("a-priori constant") {
  GridFunction u(1.0, 0, {0.0, 3.0, -5.0});
  CHECK(apriori_constant(u, 2.0, 1.0, 4.0, 0.5) == doctest::Approx((5.0 - 1.0) / (4.0 * 2.0)));
  CHECK_THROWS_AS(apriori_constant(u, 0.0, 1.0, 4.0, 0.5), ContractViolation);
}
