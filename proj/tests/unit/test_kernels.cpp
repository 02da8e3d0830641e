#include <doctest.h>

#include <cmath>
#include <numbers>

#include "fdlap/errors.hpp"
#include "fdlap/kernels.hpp"

using namespace fdlap;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

// Reference values computed with mpmath at 40 digits.
TEST_CASE("closed-form kernels") {
  CHECK(rel(kernel_value(0.25, 1.0, 1, Power::positive), 0.21574104047535174267) < 1e-14);
  CHECK(rel(kernel_value(0.75, 1.0, 7, Power::positive), 0.0023340090717395309793) < 1e-14);
  CHECK(rel(kernel_value(0.1, 1.0, 100, Power::positive), 0.00035954723282146474779) < 1e-13);
  CHECK(rel(kernel_value(0.9, 0.25, 3, Power::positive), 0.10124870013018903746) < 1e-14);
  CHECK(rel(kernel_value(0.5, 0.5, -2, Power::positive), 0.16976527263135502482) < 1e-14);
  CHECK(kernel_value(0.3, 1.0, 0, Power::positive) == 0.0);

  CHECK(rel(kernel_value(0.25, 1.0, 0, Power::negative), 1.180340599016096226) < 1e-14);
  CHECK(rel(kernel_value(0.25, 1.0, 1, Power::negative), 0.39344686633869874202) < 1e-14);
  CHECK(rel(kernel_value(0.1, 0.5, 10, Power::negative), 0.015798400600204052567) < 1e-14);
  CHECK(rel(kernel_value(0.4, 2.0, -3, Power::negative), 1.9407502834085095431) < 1e-14);
}

TEST_CASE("constants A_s, A_{-s} and Sigma_s") {
  const double s_list[] = {0.1, 0.25, 0.5, 0.75, 0.9};
  const double A[] = {0.090313982871455613452, 0.19947114020071633897, 0.31830988618379067154,
                      0.29920671030107450845, 0.1649049388183027249};
  const double S[] = {1.0144745487792628572, 1.0787052023767587133, 1.2732395447351626862,
                      1.5737874653547949681, 1.8124351790672195423};
  for (int i = 0; i < 5; ++i) {
    CHECK(rel(constant_A(s_list[i], Power::positive), A[i]) < 1e-14);
    CHECK(rel(kernel_sum(s_list[i], 1.0), S[i]) < 1e-14);
    CHECK(rel(kernel_sum(s_list[i], 0.25), S[i] * std::pow(0.25, -2.0 * s_list[i])) < 1e-14);
  }
  CHECK(rel(kernel_sum(0.5, 1.0), 4.0 / std::numbers::pi) < 1e-15);
  CHECK(rel(constant_A(0.1, Power::negative), 0.11451731862382133674) < 1e-14);
  CHECK(rel(constant_A(0.25, Power::negative), 0.39894228040143267794) < 1e-14);
  CHECK(rel(constant_A(0.4, Power::negative), 1.3897892913010338077) < 1e-14);
}

TEST_CASE("at s = 1/2 the kernel is 4/(pi (4m^2 - 1))") {
  for (long m = 1; m <= 50; ++m)
    CHECK(rel(kernel_value(0.5, 1.0, m, Power::positive), 4.0 / (std::numbers::pi * (4.0 * m * m - 1.0))) < 1e-14);
}

TEST_CASE("order domain") {
  CHECK_THROWS_AS(kernel_value(0.0, 1.0, 1, Power::positive), DomainError);
  CHECK_THROWS_AS(kernel_value(1.0, 1.0, 1, Power::positive), DomainError);
  CHECK_THROWS_AS(kernel_value(0.5, 1.0, 1, Power::negative), DomainError);
  CHECK_THROWS_AS(kernel_value(0.6, 1.0, 1, Power::negative), DomainError);
}

TEST_CASE("alternate binomial formula") {
  for (double s : {0.1, 0.25, 0.5, 0.75, 0.9})
    for (long m = 1; m <= 30; ++m)
      CHECK(rel(kernel_value_alt(s, m), kernel_value(s, 1.0, m, Power::positive)) < 1e-12);
}

TEST_CASE("semigroup quadrature reproduces the closed form") {
  for (double s : {0.1, 0.5, 0.9})
    for (long m : {1L, 4L, 33L, 100L})
      CHECK(rel(kernel_by_quadrature(s, 1.0, m, Power::positive), kernel_value(s, 1.0, m, Power::positive)) < 1e-8);
  for (double s : {0.1, 0.25, 0.4})
    for (long m : {0L, 2L, 50L})
      CHECK(rel(kernel_by_quadrature(s, 0.5, m, Power::negative), kernel_value(s, 0.5, m, Power::negative)) < 1e-8);
}

TEST_CASE("tail mass telescopes exactly") {
  CHECK(rel(kernel_tail_mass(0.3, 1.0, 50), 0.0729140099520182184309) < 1e-13);
  CHECK(rel(kernel_tail_mass(0.75, 0.5, 10), 0.0331878288717363365925) < 1e-13);
  double head = 0.0;
  for (long m = 1; m <= 200; ++m) head += 2.0 * kernel_value(0.6, 1.0, m, Power::positive);
  CHECK(rel(head + kernel_tail_mass(0.6, 1.0, 200), kernel_sum(0.6, 1.0)) < 1e-13);
}

TEST_CASE("refined asymptotics of the negative power") {
  // C_s = sup_m |K_{-s}(m) h^{-2s} - A_{-s} m^{2s-1}| m^{2-2s} is finite. The 1/m term of
  // the Gamma ratio cancels, so the scaled remainder even decays like 1/m.
  const double s = 0.3;
  const double a = constant_A(s, Power::negative);
  auto scaled = [&](long m) {
    return std::abs(kernel_value(s, 0.5, m, Power::negative) * std::pow(0.5, -2.0 * s) - a * std::pow(m, 2.0 * s - 1.0)) *
           std::pow(m, 2.0 - 2.0 * s);
  };
  double sup = 0.0;
  for (long m = 1; m <= 10000; ++m) sup = std::max(sup, scaled(m));
  CHECK(sup < 1.0);
  CHECK(scaled(1000) < 0.02 * scaled(10));
}

TEST_CASE("limits in s") {
  CHECK(std::abs(kernel_value(0.999, 1.0, 1, Power::positive) - 1.0) < 1e-2);
  const double rest = kernel_sum(0.999, 1.0) - 2.0 * kernel_value(0.999, 1.0, 1, Power::positive);
  CHECK(std::abs(rest) < 1e-2);
  const JumpLaw law = jump_law(0.001, 10);
  CHECK(law.p[1] < 1e-3);
  CHECK(std::abs(law.mass + law.tail - 1.0) < 1e-13);
}

TEST_CASE("kernel tables") {
  const KernelTable t = table_with_radius(0.4, 0.5, Power::positive, 1000);
  CHECK(t(0) == 0.0);
  CHECK(rel(t(-17), kernel_value(0.4, 0.5, 17, Power::positive)) < 1e-15);
  CHECK(rel(t(1000), kernel_value(0.4, 0.5, 1000, Power::positive)) < 1e-15);
  CHECK_THROWS_AS(t(1001), ContractViolation);
  // The tail model bounds the exact neglected mass from above.
  CHECK(t.tail_bound() >= kernel_tail_mass(0.4, 0.5, 1000));

  const KernelTable b = build_table(0.3, 1.0, Power::positive, 1e-6);
  CHECK(kernel_tail_mass(0.3, 1.0, b.radius()) <= 1e-6);

  // A radius far beyond the dense limit costs nothing until queried.
  const KernelTable lazy = table_with_radius(0.2, 1.0, Power::positive, 1'000'000'000L);
  CHECK(rel(lazy(999'999'999L), kernel_value(0.2, 1.0, 999'999'999L, Power::positive)) < 1e-14);
}

TEST_CASE("H_s function and its derivatives") {
  const double s = 0.3;
  const double r = 2.5;
  const double d = 1e-4;
  const double h0 = h_s_function(s, r, 0);
  CHECK(h0 > 0.0);
  const double d1 = (h_s_function(s, r + d, 0) - h_s_function(s, r - d, 0)) / (2 * d);
  CHECK(rel(h_s_function(s, r, 1), d1) < 1e-6);
  const double d2 = (h_s_function(s, r + d, 1) - h_s_function(s, r - d, 1)) / (2 * d);
  CHECK(rel(h_s_function(s, r, 2), d2) < 1e-6);
}

TEST_CASE("H_s matches the negative-power kernel up to a constant") {
  const double s = 0.2;
  const double h1 = h_s_function(s, 1.0, 0);
  const double k1 = kernel_value(s, 1.0, 1, Power::negative);
  for (long m = 1; m <= 50; ++m) {
    const double lhs = h_s_function(s, static_cast<double>(m), 0) / h1;
    const double rhs = kernel_value(s, 1.0, m, Power::negative) / k1;
    CHECK(std::abs(lhs - rhs) < 1e-8);
  }
  // H_s(r) (r+s)^{1-2s} stays bounded; the first derivative is negative.
  double lo = INFINITY, hi = 0.0;
  for (double r = 0.1; r <= 1e4; r *= 1.5) {
    const double v = h_s_function(s, r, 0) * std::pow(r + s, 1.0 - 2.0 * s);
    lo = std::min(lo, v);
    hi = std::max(hi, v);
    CHECK(h_s_function(s, r, 1) < 0.0);
  }
  CHECK(lo > 0.0);
  CHECK(hi / lo < 10.0);
}

TEST_CASE("two-sided power bounds over five decades") {
  for (double s : {0.1, 0.3, 0.45}) {
    for (Power p : {Power::positive, Power::negative}) {
      const double e = p == Power::positive ? 1.0 + 2.0 * s : 1.0 - 2.0 * s;
      double lo = INFINITY, hi = 0.0;
      for (long m = 1; m <= 100000; m = m < 10 ? m + 1 : m * 3 / 2) {
        const double v = kernel_value(s, 1.0, m, p) * std::pow(static_cast<double>(m), e);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
      }
      CHECK(lo > 0.0);
      CHECK(hi / lo < 3.0);
    }
  }
}
