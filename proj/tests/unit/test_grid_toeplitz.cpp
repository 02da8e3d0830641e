#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "fdlap/errors.hpp"
#include "fdlap/grid_function.hpp"
#include "fdlap/toeplitz.hpp"

using namespace fdlap;

TEST_CASE("grid function basics") {
  GridFunction u(0.5, -2, {0.0, 1.0, 0.0, -2.0, 0.0});
  CHECK(u.at(-1) == 1.0);
  CHECK(u.at(10) == 0.0);
  CHECK(u.support() == Window{-1, 1});
  CHECK(u.support_count() == 2);  // nonzero points
  CHECK(u.norm_inf() == 2.0);
  CHECK(std::abs(u.norm_lp(2.0) - std::sqrt(0.5 * 5.0)) < 1e-15);
  const GridFunction v = u.on(Window{-5, 5});
  CHECK(v.size() == 11);
  CHECK(v.at(1) == -2.0);
  const GridFunction w = u + 2.0 * delta(0.5, 4);
  CHECK(w.window() == Window{-2, 4});
  CHECK(w.at(4) == 2.0);
  CHECK(GridFunction(0.5, Window{0, 3}).support().size() == 0);
}

TEST_CASE("grid function CSV round trip") {
  GridFunction u(0.125, -3, {0.1, -1e-300, 3.0, 1.0 / 3.0});
  std::stringstream ss;
  write_csv(ss, u);
  const GridFunction back = read_csv(ss);
  CHECK(back.h() == u.h());
  CHECK(back.offset() == u.offset());
  for (long j = u.first(); j <= u.last(); ++j) CHECK(back.at(j) == u.at(j));

  std::stringstream bad("j,x,value\n0,0,1\n");
  CHECK_THROWS_AS(read_csv(bad), ConfigError);
}

TEST_CASE("direct and FFT Toeplitz products agree") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> U(-1.0, 1.0);
  for (long n : {1L, 7L, 300L}) {
    const long w = n + 13;
    std::vector<double> k(static_cast<std::size_t>(w + n - 1)), x(static_cast<std::size_t>(n));
    for (auto& v : k) v = U(rng);
    for (auto& v : x) v = U(rng);
    const auto a = toeplitz_apply(k, x, w, ConvPath::direct);
    const auto b = toeplitz_apply(k, x, w, ConvPath::fft);
    REQUIRE(a.size() == static_cast<std::size_t>(w));
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(std::abs(a[i] - b[i]) < 1e-12);
    // y_0 pairs x[q] with k[n-1-q].
    double y0 = 0.0;
    for (long q = 0; q < n; ++q) y0 += k[static_cast<std::size_t>(n - 1 - q)] * x[static_cast<std::size_t>(q)];
    CHECK(std::abs(a[0] - y0) < 1e-13);
  }
}

TEST_CASE("symmetric Toeplitz by circulant embedding") {
  CHECK(next_pow2(1) == 1);
  CHECK(next_pow2(5) == 8);
  CHECK(next_pow2(1024) == 1024);
  const long n = 500;
  std::vector<double> c(static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) c[static_cast<std::size_t>(i)] = 1.0 / (1.0 + i * i);
  const SymmetricToeplitz fft(c, ConvPath::fft);
  const SymmetricToeplitz direct(c, ConvPath::direct);
  CHECK(fft.uses_fft());
  CHECK_FALSE(direct.uses_fft());
  std::vector<double> x(static_cast<std::size_t>(n)), y1(x.size()), y2(x.size());
  for (long i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] = std::sin(0.1 * i);
  fft.apply(x, y1);
  direct.apply(x, y2);
  for (std::size_t i = 0; i < x.size(); ++i) CHECK(std::abs(y1[i] - y2[i]) < 1e-12);
}
