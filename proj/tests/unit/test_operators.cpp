#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "fdlap/errors.hpp"
#include "fdlap/operators.hpp"

using namespace fdlap;

namespace {

GridFunction random_compact(double h, long n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  std::vector<double> v(static_cast<std::size_t>(n));
  for (auto& x : v) x = U(rng);
  return GridFunction(h, -n / 2, v);
}

double sup_diff(const GridFunction& a, const GridFunction& b, const Window& w) {
  double d = 0.0;
  for (long j = w.first; j <= w.last; ++j) d = std::max(d, std::abs(a.at(j) - b.at(j)));
  return d;
}

}  // namespace

TEST_CASE("three-point Laplacian") {
  const GridFunction u = delta(0.5, 0);
  const GridFunction l = discrete_laplacian(u);
  CHECK(l.at(0) == 8.0);
  CHECK(l.at(1) == -4.0);
  CHECK(l.at(-1) == -4.0);
}

TEST_CASE("pointwise formula equals the multiplier and the semigroup integral") {
  for (double s : {0.2, 0.5, 0.8}) {
    const GridFunction u = random_compact(0.5, 16, 11);
    const Window w = u.window().dilate(8);
    const KernelTable t = table_with_radius(s, 0.5, Power::positive, 64);
    const GridFunction a = frac_laplacian(u, t, w);
    CHECK(sup_diff(a, multiplier_oracle(u, s, w), w) < 1e-9);
    CHECK(sup_diff(a, frac_laplacian_by_semigroup(u, s, w), w) < 1e-7);
  }
}

TEST_CASE("direct and FFT paths agree") {
  const GridFunction u = random_compact(1.0, 400, 5);
  const Window w = u.window().dilate(50);
  const KernelTable t = table_with_radius(0.35, 1.0, Power::positive, 1000);
  CHECK(sup_diff(frac_laplacian(u, t, w, ConvPath::direct), frac_laplacian(u, t, w, ConvPath::fft), w) < 1e-11);
}

TEST_CASE("cosine symbol") {
  // (4/h^2 sin^2(omega h/2))^s, reference values from mpmath.
  const GridFunction a = frac_laplacian_cosine(1.0, 0.0, 0.3, 0.25, Window{0, 4});
  for (long j = 0; j <= 4; ++j)
    CHECK(std::abs(a.at(j) - 0.99843790672938253242 * std::cos(0.25 * j)) < 1e-12);
  const GridFunction b = frac_laplacian_cosine(2.0, 0.4, 0.7, 0.5, Window{-3, 3});
  for (long j = -3; j <= 3; ++j)
    CHECK(std::abs(b.at(j) - 2.4882477418752608002 * std::cos(2.0 * 0.5 * j + 0.4)) < 1e-12);
}

TEST_CASE("negative power inverts the positive power") {
  const double s = 0.3;
  const double h = 0.5;
  const GridFunction f = random_compact(h, 9, 2);
  const Window wide = f.window().dilate(4000);
  const GridFunction u = frac_integral(f, table_with_radius(s, h, Power::negative, 10000), wide);
  const Window inner = f.window().dilate(3);
  const GridFunction back = frac_laplacian(u, table_with_radius(s, h, Power::positive, 10000), inner);
  // u is cut off at distance 4000 points; the missing tail acts on supp f at O(1e-4).
  CHECK(sup_diff(back, f, inner) < 1e-4);
  CHECK(sup_diff(frac_integral(f, table_with_radius(s, h, Power::negative, 64), inner),
                 frac_integral_by_semigroup(f, s, inner), inner) < 1e-7);
}

TEST_CASE("heat semigroup conserves mass") {
  const GridFunction u = delta(1.0, 0);
  const GridFunction v = heat_semigroup(u, 3.0);
  double mass = 0.0;
  for (double x : v.values()) mass += x;
  CHECK(std::abs(mass - 1.0) < 1e-13);
  CHECK(std::abs(v.at(0) - 0.166657432639816575563) < 1e-14);  // e^{-6} I_0(6), mpmath
}

TEST_CASE("window beyond the table radius is rejected") {
  const GridFunction u = delta(1.0, 0);
  const KernelTable t = table_with_radius(0.4, 1.0, Power::positive, 10);
  CHECK_THROWS_AS(frac_laplacian(u, t, Window{-20, 20}), ContractViolation);
}

TEST_CASE("discrete derivatives and Hölder seminorms") {
  GridFunction u(0.5, 0, {0.0, 1.0, 4.0, 9.0});
  const GridFunction dp = discrete_derivative(u, Direction::plus);
  const GridFunction dm = discrete_derivative(u, Direction::minus);
  CHECK(dp.at(0) == 2.0);
  CHECK(dm.at(1) == 2.0);
  // A hat function sampled on a grid has Lipschitz seminorm 1.
  std::vector<double> v;
  for (long j = -20; j <= 20; ++j) v.push_back(std::max(0.0, 1.0 - std::abs(0.1 * j)));
  const GridFunction a(0.1, -20, v);
  CHECK(std::abs(holder_seminorm(a, 0, 1.0).value - 1.0) < 1e-12);
  // Without padding the jump to the implicit zeros is not seen.
  std::vector<double> absx, sqrtx, ones;
  for (long j = -20; j <= 20; ++j) {
    absx.push_back(std::abs(0.1 * j));
    sqrtx.push_back(std::sqrt(std::abs(0.1 * j)));
    ones.push_back(1.0);
  }
  CHECK(std::abs(holder_seminorm(GridFunction(0.1, -20, absx), 0, 1.0).value - 1.0) < 1e-12);
  CHECK(std::abs(holder_seminorm(GridFunction(0.1, -20, sqrtx), 0, 0.5).value - 1.0) < 1e-12);
  for (int k = 0; k <= 2; ++k)
    for (double alpha : {0.3, 1.0}) CHECK(holder_seminorm(GridFunction(0.1, -20, ones), k, alpha).value == 0.0);
  // With the zero padding made explicit, the edge jump of the constant dominates.
  const GridFunction c(0.1, -20, ones);
  CHECK(std::abs(holder_seminorm(c.on(c.window().dilate(1)), 0, 1.0).value - 10.0) < 1e-12);
}

TEST_CASE("D_+ commutes with the fractional Laplacian") {
  const double h = 0.25;
  const GridFunction u = random_compact(h, 16, 3);
  const KernelTable t = table_with_radius(0.35, h, Power::positive, 200);
  const Window w = u.window().dilate(40);
  const GridFunction lhs = discrete_derivative(frac_laplacian(u, t, w), Direction::plus);
  const GridFunction rhs = frac_laplacian(discrete_derivative(u, Direction::plus), t, w);
  CHECK(sup_diff(lhs, rhs, Window{w.first, w.last - 1}) < 1e-10);
}

TEST_CASE("l2 operator bound 4^s / h^{2s}") {
  for (double s : {0.2, 0.5, 0.8}) {
    for (double h : {1.0, 0.125}) {
      const double bound = std::pow(4.0, s) * std::pow(h, -2.0 * s);
      const KernelTable t = table_with_radius(s, h, Power::positive, 5000);
      for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const GridFunction u = random_compact(h, 24, seed);
        const GridFunction lu = frac_laplacian(u, t, u.window().dilate(4000));
        CHECK(lu.norm_lp(2.0) <= bound * u.norm_lp(2.0) * (1.0 + 1e-9));
      }
      // Checkerboard data nearly attains it.
      std::vector<double> v;
      for (long j = 0; j < 64; ++j) v.push_back(j % 2 ? 1.0 : -1.0);
      const GridFunction u(h, 0, v);
      const GridFunction lu = frac_laplacian(u, t, u.window().dilate(4000));
      CHECK(lu.norm_lp(2.0) > 0.5 * bound * u.norm_lp(2.0));
    }
  }
}

TEST_CASE("Hölder mapping ratio is bounded across meshes") {
  // [(-Delta_h)^s u]_{alpha-2s} / [u]_alpha for u sampling a fixed Lipschitz profile with random bumps.
  const double s = 0.2;
  const double alpha = 1.0;
  std::vector<double> ratios;
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> U(0.2, 1.0);
    const double a = U(rng), b = U(rng);
    for (int k = 3; k <= 8; ++k) {
      const double h = std::ldexp(1.0, -k);
      const long n = static_cast<long>(std::lround(1.0 / h));
      std::vector<double> v;
      for (long j = -n; j <= n; ++j) {
        const double x = h * static_cast<double>(j);
        v.push_back(std::max(0.0, a - std::abs(x)) + b * std::max(0.0, 0.5 - std::abs(x - 0.25)));
      }
      const GridFunction u(h, -n, v);
      const KernelTable t = table_with_radius(s, h, Power::positive, 8 * n);
      const Window w = u.window().dilate(2 * n);
      const GridFunction lu = frac_laplacian(u, t, w);
      const double num = holder_seminorm(lu, 0, alpha - 2.0 * s).value;
      const double den = holder_seminorm(u.on(w), 0, alpha).value;
      ratios.push_back(num / den);
    }
  }
  std::vector<double> sorted = ratios;
  std::sort(sorted.begin(), sorted.end());
  const double median = sorted[sorted.size() / 2];
  CHECK(sorted.back() <= 10.0 * median);
}

TEST_CASE("bilinear form is the energy of the half power") {
  const double s = 0.4;
  const GridFunction u = random_compact(1.0, 12, 9);
  const KernelTable t = table_with_radius(s, 1.0, Power::positive, 100000);
  const double e = bilinear_form(u, u, t);
  const GridFunction lu = frac_laplacian(u, t, u.window());
  double pairing = 0.0;
  for (long j = u.first(); j <= u.last(); ++j) pairing += u.at(j) * lu.at(j);
  CHECK(std::abs(e - pairing) < 1e-12 * std::abs(pairing));
  CHECK(e > 0.0);
}
