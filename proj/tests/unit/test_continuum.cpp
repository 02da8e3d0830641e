#include <doctest.h>

#include <cmath>

#include "fdlap/continuum.hpp"
#include "fdlap/errors.hpp"
#include "fdlap/kernels.hpp"

using namespace fdlap;

TEST_CASE("corpus entries") {
  const auto all = corpus();
  CHECK(all.size() == 9);
  CHECK(corpus_entry("holder-0.6").alpha == 0.6);
  CHECK(corpus_entry("c1-0.3").k == 1);
  CHECK_THROWS_AS(corpus_entry("nope"), ConfigError);
  CHECK(bump(0.0) == 1.0);
  CHECK(bump(1.0) == 0.0);
  const TestFunction g = gaussian();
  const double d = 1e-5;
  CHECK(std::abs(g.second_derivative(0.7) - (g.derivative(0.7 + d) - g.derivative(0.7 - d)) / (2 * d)) < 1e-8);
  const TestFunction b = smooth_bump();
  CHECK(std::abs(b.second_derivative(0.4) - (b.derivative(0.4 + d) - b.derivative(0.4 - d)) / (2 * d)) < 1e-7);
}

TEST_CASE("cosine symbol of the continuous operator") {
  for (double omega : {0.5, 1.0, 2.0}) {
    const TestFunction U = cosine(omega);
    for (double x : {0.0, 0.3, 1.7}) {
      const double ref = std::pow(omega, 2.0 * 0.35) * std::cos(omega * x);
      CHECK(std::abs(continuous_frac_laplacian(U, x, 0.35) - ref) < 1e-6);
    }
  }
}

// Reference values from the Fourier integral, mpmath at 40 digits.
TEST_CASE("gaussian against its Fourier representation") {
  const TestFunction g = gaussian();
  CHECK(std::abs(continuous_frac_laplacian(g, 0.0, 0.25) - 0.97774106744692379763) < 1e-8);
  CHECK(std::abs(continuous_frac_laplacian(g, 0.7, 0.25) - 0.43198965790929368322) < 1e-8);
  CHECK(std::abs(continuous_frac_laplacian(g, 0.0, 0.6) - 1.233109752124648802) < 1e-8);
  CHECK(std::abs(continuous_frac_laplacian(g, 0.7, 0.6) - 0.27932358164861029935) < 1e-8);
}

TEST_CASE("constants are annihilated") {
  CHECK(continuous_frac_laplacian(constant_function(3.0), 0.4, 0.5) == 0.0);
}

TEST_CASE("insufficient regularity is a contract violation") {
  CHECK_THROWS_AS(continuous_frac_laplacian(holder_bump(0.3), 0.2, 0.4), ContractViolation);
}

TEST_CASE("Riesz potential values") {
  const TestFunction F = smooth_bump();
  CHECK(std::abs(riesz_potential(F, 0.3, 0.2) - 1.0378527899031038101) < 1e-8);
  CHECK(std::abs(riesz_potential(F, 2.5, 0.2) - 0.19651730090679824523) < 1e-8);
}

TEST_CASE("Riesz potential decays like the mass times |x|^{2s-1}") {
  const double s = 0.2;
  const RieszSolution U(holder_bump(0.3), s);
  const double x = 50.0;
  const double far = U(x) * std::pow(x, 1.0 - 2.0 * s);
  CHECK(std::abs(far / U.mass() - 1.0) < 0.05);
  CHECK(std::abs(U(x) - riesz_potential(U.source(), x, s)) < 1e-10);
  CHECK(std::abs(U(-3.0)) <= U.envelope(-3.0));
}

TEST_CASE("round trip through the Riesz potential") {
  const double s = 0.2;
  const RieszSolution U(holder_bump(0.3), s);
  const TestFunction T = U.as_test_function();
  for (double x : {-0.8, -0.25, 0.05, 0.5, 1.5}) {
    CHECK(std::abs(continuous_frac_laplacian(T, x, s) - U.source()(x)) < 1e-5);
  }
}

TEST_CASE("sample points where rounding splits coincident breaks") {
  // -1.9 + 0.2 * 12 lands 4e-16 above 0.5, between the kink at 0 and the support edge.
  const double s = 0.2;
  const RieszSolution U(holder_bump(0.3), s);
  const double x = -1.9 + 0.2 * 12;
  CHECK(std::abs(continuous_frac_laplacian(U.as_test_function(), x, s) - U.source()(x)) < 1e-5);
}

TEST_CASE("restriction to the mesh") {
  const GridFunction u = restrict_to_mesh(smooth_bump(), 0.25, Window{-5, 5});
  CHECK(u.at(0) == 1.0);
  CHECK(u.at(4) == 0.0);
  CHECK(u.at(2) == bump(0.5));
}
