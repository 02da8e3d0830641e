#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "fdlap/dirichlet.hpp"
#include "fdlap/kernels.hpp"
#include "fdlap/operators.hpp"
#include "fdlap/specialfn.hpp"
#include "fdlap/toeplitz.hpp"

using namespace fdlap;

namespace {

std::vector<double> ramp(long n) {
  std::vector<double> v(static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = std::sin(0.37 * i);
  return v;
}

void toeplitz(benchmark::State& state, ConvPath path) {
  const long n = state.range(0);
  const auto x = ramp(n);
  const auto k = ramp(2 * n - 1);
  for (auto _ : state) benchmark::DoNotOptimize(toeplitz_apply(k, x, n, path));
  state.SetComplexityN(n);
}

void BM_ToeplitzDirect(benchmark::State& state) { toeplitz(state, ConvPath::direct); }
void BM_ToeplitzFft(benchmark::State& state) { toeplitz(state, ConvPath::fft); }

void BM_SymmetricToeplitzApply(benchmark::State& state) {
  const long n = state.range(0);
  std::vector<double> c(static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) c[static_cast<std::size_t>(i)] = kernel_value(0.3, 1.0, i, Power::positive);
  const SymmetricToeplitz t(c);
  const auto x = ramp(n);
  std::vector<double> y(x.size());
  for (auto _ : state) {
    t.apply(x, y);
    benchmark::DoNotOptimize(y.data());
  }
}

void BM_KernelTable(benchmark::State& state) {
  const long radius = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(table_with_radius(0.4, 0.5, Power::positive, radius));
}

void BM_KernelByQuadrature(benchmark::State& state) {
  const long m = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(kernel_by_quadrature(0.75, 1.0, m, Power::positive));
}

void BM_BesselScaled(benchmark::State& state) {
  const double t = static_cast<double>(state.range(0));
  for (auto _ : state)
    for (long k = 0; k < 64; ++k) benchmark::DoNotOptimize(bessel_i_scaled(k, t));
}

void BM_BesselOrders(benchmark::State& state) {
  const double t = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bessel_i_scaled_orders(t, 64));
}

void BM_DirichletSolve(benchmark::State& state) {
  const double h = std::ldexp(1.0, -static_cast<int>(state.range(0)));
  const double R = 4.0;
  const Window B = ball_window(R, h);
  const KernelTable table = table_with_radius(0.2, h, Power::positive, B.size());
  const GridFunction f(h, B.first, std::vector<double>(static_cast<std::size_t>(B.size()), 1.0));
  const DirichletSystem sys = assemble(0.2, h, R, f, {}, table);
  for (auto _ : state) benchmark::DoNotOptimize(solve(sys));
  state.counters["unknowns"] = static_cast<double>(B.size());
}

}  // namespace

BENCHMARK(BM_ToeplitzDirect)->RangeMultiplier(4)->Range(16, 4096)->Complexity();
BENCHMARK(BM_ToeplitzFft)->RangeMultiplier(4)->Range(16, 4096)->Complexity();
BENCHMARK(BM_SymmetricToeplitzApply)->RangeMultiplier(8)->Range(64, 1 << 15);
BENCHMARK(BM_KernelTable)->RangeMultiplier(10)->Range(100, 1000000);
BENCHMARK(BM_KernelByQuadrature)->Arg(1)->Arg(30)->Arg(100);
BENCHMARK(BM_BesselScaled)->Arg(1)->Arg(20)->Arg(500);
BENCHMARK(BM_BesselOrders)->Arg(1)->Arg(20)->Arg(500);
BENCHMARK(BM_DirichletSolve)->DenseRange(3, 7, 2)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
