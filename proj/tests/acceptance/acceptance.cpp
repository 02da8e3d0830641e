// Acceptance suite: one PASS/FAIL line per criterion. Tolerances are fixed here and
// must not be loosened to make a run pass.
//
// Usage: fdlap_acceptance [criterion numbers...]   (all when none are given)

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "fdlap/continuum.hpp"
#include "fdlap/dirichlet.hpp"
#include "fdlap/experiments.hpp"
#include "fdlap/kernels.hpp"
#include "fdlap/operators.hpp"

using namespace fdlap;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  const char* name;
  std::function<Outcome()> run;
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<double> dyadic(int k_first, int k_last) {
  std::vector<double> hs;
  for (int k = k_first; k <= k_last; ++k) hs.push_back(std::ldexp(1.0, -k));
  return hs;
}

const std::vector<double> kOrders{0.1, 0.25, 0.5, 0.75, 0.9};

Outcome kernel_agreement() {
  constexpr double kQuadTol = 1e-8;
  constexpr double kAltTol = 1e-12;
  constexpr double kBudget = 30.0;
  const auto t0 = std::chrono::steady_clock::now();
  double quad = 0.0;
  double alt = 0.0;
  for (double s : kOrders) {
    for (long m = 1; m <= 100; ++m)
      quad = std::max(quad, rel(kernel_by_quadrature(s, 1.0, m, Power::positive), kernel_value(s, 1.0, m, Power::positive)));
    for (long m = -30; m <= 30; ++m)
      if (m != 0) alt = std::max(alt, rel(kernel_value_alt(s, m), kernel_value(s, 1.0, m, Power::positive)));
  }
  const double dt = seconds_since(t0);
  return {quad < kQuadTol && alt < kAltTol && dt < kBudget,
          "quadrature " + fmt("%.2e", quad) + ", alternate " + fmt("%.2e", alt) + ", " + fmt("%.1f s", dt)};
}

Outcome kernel_sum_identity() {
  constexpr double kTol = 1e-8;
  constexpr long M = 100000;
  double worst = 0.0;
  double at_half = 0.0;
  for (double s : kOrders) {
    for (double h : {1.0, 0.25}) {
      double sum = 0.0;
      for (long m = M; m >= 1; --m) sum += kernel_value(s, h, m, Power::positive);
      sum = 2.0 * sum + kernel_tail_mass(s, h, M);
      worst = std::max(worst, rel(sum, kernel_sum(s, h)));
      if (s == 0.5 && h == 1.0) at_half = rel(sum, 4.0 / std::numbers::pi);
    }
  }
  return {worst < kTol && at_half < kTol,
          "worst " + fmt("%.2e", worst) + ", 4/pi at s=1/2 " + fmt("%.2e", at_half)};
}

Outcome operator_oracles() {
  constexpr double kSemigroupTol = 1e-7;
  constexpr double kMultiplierTol = 1e-9;
  constexpr double kBudget = 60.0;
  constexpr long N = 64;
  const auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(20240607);
  std::uniform_real_distribution<double> value(-1.0, 1.0);
  std::uniform_real_distribution<double> order(0.05, 0.95);
  const double meshes[] = {1.0, 0.5, 0.125};
  double semi = 0.0;
  double mult = 0.0;
  for (int i = 0; i < 20; ++i) {
    const double s = order(rng);
    const double h = meshes[i % 3];
    std::vector<double> v(N);
    for (auto& x : v) x = value(rng);
    const GridFunction u(h, -N / 2, v);
    const Window w = u.window().dilate(N / 2);
    const GridFunction a = frac_laplacian(u, table_with_radius(s, h, Power::positive, 2 * N), w);
    const GridFunction b = frac_laplacian_by_semigroup(u, s, w);
    const GridFunction c = multiplier_oracle(u, s, w);
    for (long j = w.first; j <= w.last; ++j) {
      semi = std::max(semi, std::abs(a.at(j) - b.at(j)));
      mult = std::max(mult, std::abs(a.at(j) - c.at(j)));
    }
  }
  const double dt = seconds_since(t0);
  return {semi < kSemigroupTol && mult < kMultiplierTol && dt < kBudget,
          "semigroup " + fmt("%.2e", semi) + ", multiplier " + fmt("%.2e", mult) + ", " + fmt("%.1f s", dt)};
}

// Deviations are measured relative to the sup norm of the limit object, on a window
// three times the width of supp u.
Outcome limits_in_s() {
  constexpr double kTol = 0.05;
  const double h = 0.25;
  std::vector<double> v;
  for (long j = -8; j <= 8; ++j) v.push_back(bump(h * j / 2.0));
  const GridFunction u(h, -8, v);
  const Window w = u.window().dilate(17);
  const GridFunction lap = discrete_laplacian(u);
  auto deviation = [&](double s, const GridFunction& target) {
    const GridFunction l = frac_laplacian(u, table_with_radius(s, h, Power::positive, w.size() + u.size()), w);
    double d = 0.0;
    double n = 0.0;
    for (long j = w.first; j <= w.last; ++j) {
      d = std::max(d, std::abs(l.at(j) - target.at(j)));
      n = std::max(n, std::abs(target.at(j)));
    }
    return d / n;
  };
  auto sweep = [&](const std::vector<double>& orders, const GridFunction& target, bool& monotone) {
    double prev = INFINITY;
    double last = 0.0;
    for (double s : orders) {
      last = deviation(s, target);
      monotone = monotone && last < prev;
      prev = last;
    }
    return last;
  };
  bool monotone = true;
  const double at_zero = sweep({0.2, 0.1, 0.05, 0.02, 0.01}, u, monotone);
  const double at_one = sweep({0.8, 0.9, 0.95, 0.98, 0.99}, lap, monotone);
  return {monotone && at_zero < kTol && at_one < kTol,
          "s=0.01 vs identity " + fmt("%.4f", at_zero) + ", s=0.99 vs -Delta_h " + fmt("%.4f", at_one) +
              (monotone ? ", monotone" : ", NOT monotone")};
}

Outcome rate_cases(const std::vector<std::pair<const char*, double>>& cases, double budget) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto hs = dyadic(3, 9);
  bool ok = true;
  std::string detail;
  for (const auto& [id, s] : cases) {
    const ComparisonResult r = run_comparison(corpus_entry(id), s, hs);
    const bool pass = slope_within(r.report, r.kase.rate);
    ok = ok && pass && r.report.residual < kRateResidualLimit;
    detail += std::string(detail.empty() ? "" : "; ") + id + " s=" + fmt("%.2f", s) + " slope " +
              fmt("%.3f", r.report.slope) + " (rate " + fmt("%.2f", r.kase.rate) + ", res " +
              fmt("%.3f", r.report.residual) + ")";
  }
  const double dt = seconds_since(t0);
  return {ok && dt < budget, detail + ", " + fmt("%.1f s", dt)};
}

Outcome holder_rate() {
  return rate_cases({{"holder-0.6", 0.1}, {"holder-0.6", 0.2}, {"holder-0.9", 0.1}, {"holder-0.9", 0.2}}, 300.0);
}

Outcome c1_rate() { return rate_cases({{"c1-0.3", 0.25}, {"c1-0.3", 0.4}, {"c1-0.6", 0.4}}, 300.0); }

Outcome dirichlet_pipeline() {
  constexpr double kLow = 0.2;
  constexpr double kHigh = 0.45;
  constexpr double kResidual = 1e-10;
  constexpr double kBudget = 600.0;
  const auto t0 = std::chrono::steady_clock::now();
  const DirichletRun run = run_dirichlet_convergence(corpus_entry("holder-0.3"), 0.2, dyadic(3, 7), kResidual);
  const double dt = seconds_since(t0);
  const double worst = *std::max_element(run.residual.begin(), run.residual.end());
  const auto [rmin, rmax] = std::minmax_element(run.exterior_ratio.begin(), run.exterior_ratio.end());
  const bool ok = run.report.established && run.report.slope >= kLow && run.report.slope <= kHigh &&
                  worst <= kResidual && dt < kBudget;
  return {ok, "slope " + fmt("%.3f", run.report.slope) + ", res " + fmt("%.3f", run.report.residual) +
                  ", CG residual " + fmt("%.1e", worst) + ", exterior ratio " + fmt("%.3f", *rmin) + ".." +
                  fmt("%.3f", *rmax) + ", " + fmt("%.1f s", dt)};
}

// Half the instances solve with f < 0 (subsolutions), half with f > 0, each with a random
// compact exterior datum on a band around the ball.
Outcome maximum_principle_and_barrier() {
  constexpr double kAprioriSpread = 3.0;
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double orders[] = {0.2, 0.5, 0.8};

  int held = 0;
  for (int i = 0; i < 50; ++i) {
    const double s = orders[i % 3];
    const double h = std::ldexp(1.0, -2 - i % 3);
    const double R = 1.0 + (i % 4);
    const Window B = ball_window(R, h);
    const double sign = i % 2 == 0 ? -1.0 : 1.0;
    std::vector<double> f(static_cast<std::size_t>(B.size()));
    for (auto& x : f) x = sign * (0.1 + unit(rng));
    const long band = B.size() / 2 + 1;
    std::vector<double> g(static_cast<std::size_t>(B.size() + 2 * band));
    for (auto& x : g) x = 2.0 * unit(rng) - 1.0;
    ExteriorDatum ext;
    ext.compact = GridFunction(h, B.first - band, g);
    const KernelTable t = table_with_radius(s, h, Power::positive, B.size() + 2 * band);
    const SolveReport sol = solve(assemble(s, h, R, GridFunction(h, B.first, f), ext, t), 1e-12);
    const MaxPrincipleReport rep = max_principle_check(sol.solution, t, B);
    const bool classified = sign < 0 ? rep.subsolution : rep.supersolution;
    if (classified && rep.holds) ++held;
  }

  double m_fit = INFINITY;
  double m_max = 0.0;
  std::vector<double> apriori;
  for (double s : orders) {
    for (double R : {1.0, 2.0, 4.0, 8.0}) {
      for (int k = 2; k <= 5; ++k) {
        const double h = std::ldexp(1.0, -k);
        const Window B = ball_window(R, h);
        const KernelTable t = table_with_radius(s, h, Power::positive, 2 * B.size() + 2);
        const GridFunction lw = frac_laplacian(barrier(R, h), t, B);
        for (long j = B.first; j <= B.last; ++j) {
          const double m = lw.at(j) / std::pow(R, 2.0 - 2.0 * s);
          m_fit = std::min(m_fit, m);
          m_max = std::max(m_max, m);
        }
        std::vector<double> f(static_cast<std::size_t>(B.size()));
        for (auto& x : f) x = 0.5 + 0.5 * unit(rng);
        const GridFunction F(h, B.first, f);
        const SolveReport sol = solve(assemble(s, h, R, F, {}, t));
        apriori.push_back(apriori_constant(sol.solution, F.norm_inf(), 0.0, R, s));
      }
    }
  }
  std::vector<double> sorted = apriori;
  std::sort(sorted.begin(), sorted.end());
  const double median = sorted[sorted.size() / 2];
  const double spread = sorted.back() / median;
  return {held == 50 && m_fit > 0.0 && spread <= kAprioriSpread,
          std::to_string(held) + "/50 instances, barrier m " + fmt("%.3f", m_fit) + " (max " + fmt("%.3f", m_max) +
              "), a-priori max/median " + fmt("%.2f", spread)};
}

Outcome extension_limits() {
  constexpr double kDtnTol = 1e-4;
  constexpr double kNtdTol = 1e-5;
  bool ok = true;
  std::string detail;
  for (double s : {0.2, 0.4}) {
    const ExtensionReport r = run_extension(s);
    ok = ok && r.dtn_error < kDtnTol && r.ntd_error < kNtdTol;
    detail += std::string(detail.empty() ? "" : "; ") + "s=" + fmt("%.1f", s) + " DtN " + fmt("%.1e", r.dtn_error) +
              " NtD " + fmt("%.1e", r.ntd_error);
  }
  return {ok, detail};
}

Outcome inequality_scaling() {
  constexpr double kHlsSpread = 0.10;
  constexpr double kBounded = 10.0;
  const InequalityReport r = run_inequalities(0.2, 1.5, dyadic(2, 7), 100, 7);
  return {r.hls_spread < kHlsSpread && r.sobolev_spread <= kBounded && r.poincare_spread <= kBounded,
          "HLS spread " + fmt("%.4f", r.hls_spread) + " at q=" + fmt("%.2f", r.q) + ", Sobolev max/median " +
              fmt("%.2f", r.sobolev_spread) + ", Poincare max/median " + fmt("%.2f", r.poincare_spread)};
}

Outcome riesz_round_trip() {
  constexpr double kTol = 1e-5;
  const double s = 0.2;
  const RieszSolution U(corpus_entry("holder-0.3"), s);
  const TestFunction T = U.as_test_function();
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const double x = -1.9 + 0.2 * i;
    worst = std::max(worst, std::abs(continuous_frac_laplacian(T, x, s) - U.source()(x)));
  }
  return {worst < kTol, "worst " + fmt("%.2e", worst) + " over 20 points"};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all{
      {1, "kernel three-way agreement", kernel_agreement},
      {2, "kernel sum identity", kernel_sum_identity},
      {3, "operator triple oracle", operator_oracles},
      {4, "limits s -> 0 and s -> 1", limits_in_s},
      {5, "Holder comparison rate", holder_rate},
      {6, "C^{1,alpha} comparison rate", c1_rate},
      {7, "Dirichlet convergence pipeline", dirichlet_pipeline},
      {8, "maximum principle and barrier", maximum_principle_and_barrier},
      {9, "extension limits", extension_limits},
      {10, "inequality scaling", inequality_scaling},
      {11, "continuous round trip", riesz_round_trip},
  };
  std::set<int> wanted;
  for (int i = 1; i < argc; ++i) wanted.insert(std::atoi(argv[i]));

  int failed = 0;
  for (const auto& c : all) {
    if (!wanted.empty() && !wanted.count(c.id)) continue;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s  %2d  %-32s %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
