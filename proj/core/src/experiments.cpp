#include "fdlap/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <thread>

#include "fdlap/dirichlet.hpp"
#include "fdlap/errors.hpp"
#include "fdlap/extension.hpp"
#include "fdlap/kernels.hpp"
#include "fdlap/operators.hpp"

namespace fdlap {
namespace {

// Runs f(i) for i in [0, n); each index writes only its own slot, so the result does not
// depend on the thread count.
template <class F>
void parallel_for(long n, int threads, F&& f) {
  const long t = std::clamp<long>(threads, 1, std::max<long>(1, n));
  if (t == 1) {
    for (long i = 0; i < n; ++i) f(i);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(t));
  for (long k = 0; k < t; ++k) {
    pool.emplace_back([&, k] {
      try {
        for (long i = k; i < n; i += t) f(i);
      } catch (...) {
        errors[static_cast<std::size_t>(k)] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace

ComparisonCase comparison_case(const TestFunction& U, double s) {
  const double two_s = 2.0 * s;
  if (U.k == 0) {
    if (!(two_s < U.alpha)) throw ConfigError("comparison of " + U.id + ": needs 2s < alpha");
    return {0, U.alpha - two_s, "i"};
  }
  if (U.k == 1) {
    if (two_s < U.alpha) return {1, U.alpha - two_s, "ii"};
    if (U.alpha < two_s && two_s < 1.0 + U.alpha) return {0, U.alpha - two_s + 1.0, "iii"};
    throw ConfigError("comparison of " + U.id + ": k + alpha - 2s is an integer");
  }
  const double beta = U.k + U.alpha - two_s;
  if (std::abs(beta - std::round(beta)) < 1e-12)
    throw ConfigError("comparison of " + U.id + ": k + alpha - 2s is an integer");
  const int l = static_cast<int>(std::floor(beta));
  return {l, beta - l, "iv"};
}

TestFunction derivative_of(const TestFunction& U, int l) {
  if (l == 0) return U;
  if (U.decay == Decay::periodic) {
    TestFunction d = cosine(U.omega, U.phase + 0.5 * std::numbers::pi * l);
    const double scale = std::pow(U.omega, l);
    auto base = d.value;
    d.value = [base, scale](double x) { return scale * base(x); };
    d.derivative = {};
    d.id = U.id + "^(" + std::to_string(l) + ")";
    return d;
  }
  if (l == 1 && U.derivative) {
    TestFunction d = U;
    d.id = U.id + "'";
    d.value = U.derivative;
    d.derivative = U.second_derivative;
    d.second_derivative = {};
    d.k = std::max(0, U.k - 1);
    return d;
  }
  if (l == 2 && U.second_derivative) {
    TestFunction d = U;
    d.id = U.id + "''";
    d.value = U.second_derivative;
    d.derivative = {};
    d.second_derivative = {};
    d.k = std::max(0, U.k - 2);
    return d;
  }
  throw ConfigError("derivative of order " + std::to_string(l) + " is not available for " + U.id);
}

ComparisonResult run_comparison(const TestFunction& U, double s, const std::vector<double>& hs, double window,
                                int threads) {
  check_order(s, Power::positive);
  if (U.decay == Decay::power) throw ConfigError("comparison of " + U.id + ": power-decay data is not supported");
  const ComparisonCase kase = comparison_case(U, s);
  const TestFunction dU = derivative_of(U, kase.l);

  // Continuous values at every evaluation point; coarser meshes reuse the nested points.
  std::vector<double> xs;
  for (double h : hs) {
    const long n = static_cast<long>(std::floor(window / h + 1e-9));
    for (long j = -n; j <= n; ++j) xs.push_back(h * static_cast<double>(j));
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::vector<double> cont(xs.size());
  parallel_for(static_cast<long>(xs.size()), threads, [&](long i) {
    cont[static_cast<std::size_t>(i)] = continuous_frac_laplacian(dU, xs[static_cast<std::size_t>(i)], s);
  });
  std::map<double, double> lookup;
  for (std::size_t i = 0; i < xs.size(); ++i) lookup[xs[i]] = cont[i];

  std::vector<double> errors;
  for (double h : hs) {
    const long n = static_cast<long>(std::floor(window / h + 1e-9));
    const Window out{-n, n + kase.l};
    GridFunction lu;
    switch (U.decay) {
      case Decay::periodic:
        lu = frac_laplacian_cosine(U.omega, U.phase, s, h, out);
        break;
      case Decay::constant:
        lu = GridFunction(h, out);
        break;
      case Decay::compact:
      case Decay::gaussian: {
        // Gaussian data below 1e-35 is dropped.
        const double reach = U.decay == Decay::compact ? U.support : 9.0;
        const long m = static_cast<long>(std::ceil(reach / h));
        const GridFunction u = restrict_to_mesh(U, h, {-m, m});
        const KernelTable table = table_with_radius(s, h, Power::positive, n + kase.l + m + 1);
        lu = frac_laplacian(u, table, out);
        break;
      }
      case Decay::power:
        break;
    }
    for (int i = 0; i < kase.l; ++i) lu = discrete_derivative(lu, Direction::plus);
    double err = 0.0;
    for (long j = -n; j <= n; ++j) {
      const double x = h * static_cast<double>(j);
      err = std::max(err, std::abs(lu.at(j) - lookup.at(x)));
    }
    errors.push_back(err);
  }
  ComparisonResult res{kase, fit_rate(hs, errors)};
  res.report.experiment = "converge-operator";
  res.report.case_id = U.id + ":" + kase.label;
  res.report.s = s;
  res.report.alpha = U.alpha;
  return res;
}

DirichletRun run_dirichlet_convergence(const TestFunction& F, double s, const std::vector<double>& hs, double tol,
                                       int threads) {
  check_order(s, Power::negative);
  if (F.decay != Decay::compact) throw ConfigError("Dirichlet convergence needs a compactly supported source");
  const double alpha = F.k == 0 ? F.alpha : 1.0;
  if (!(alpha + 2.0 * s < 1.0)) throw ConfigError("Dirichlet convergence needs alpha + 2s < 1");
  const RieszSolution U(F, s);
  const double fsup = [&] {
    double m = 0.0;
    for (int i = 0; i <= 4000; ++i) m = std::max(m, std::abs(F(-F.support + 2.0 * F.support * i / 4000.0)));
    return m;
  }();
  DirichletRun run;
  std::vector<double> normalized, radii;
  for (double h : hs) {
    const double R = 1.1 * std::max(2.0 * F.support, std::pow(h, -alpha));
    const Window ball = ball_window(R, h);
    const GridFunction f = restrict_to_mesh(F, h, ball);
    const KernelTable table = table_with_radius(s, h, Power::positive, ball.size());
    const DirichletSystem sys = assemble(s, h, R, f, {}, table);
    const SolveReport rep = solve(sys, tol, 20000);
    std::vector<double> exact(static_cast<std::size_t>(ball.size()));
    parallel_for(ball.size(), threads, [&](long i) {
      exact[static_cast<std::size_t>(i)] = U(h * static_cast<double>(ball.first + i));
    });
    double err = 0.0;
    for (std::size_t i = 0; i < exact.size(); ++i) err = std::max(err, std::abs(rep.x[i] - exact[i]));
    run.raw_error.push_back(err);
    run.iterations.push_back(rep.iterations);
    run.residual.push_back(rep.residual);
    run.min_ritz.push_back(rep.min_ritz);
    // U decreases away from supp F, so its exterior sup sits on the sphere |x| = R.
    run.exterior_ratio.push_back(std::max(std::abs(U(R)), std::abs(U(-R))) * std::pow(R, 1.0 - 2.0 * s) / fsup);
    normalized.push_back(err / std::pow(R, 2.0 * s));
    radii.push_back(R);
  }
  run.report = fit_rate(hs, normalized);
  run.report.experiment = "converge-dirichlet";
  run.report.case_id = F.id;
  run.report.s = s;
  run.report.alpha = alpha;
  run.report.R = radii;
  return run;
}

std::vector<KernelCheck> run_kernel_validation(const std::vector<double>& s_list, long m_quad, long m_alt) {
  std::vector<KernelCheck> rows;
  auto rel = [](double a, double b) { return b == 0.0 ? std::abs(a) : std::abs(a - b) / std::abs(b); };
  auto push = [&](std::string check, double s, double h, long m, double value, double ref, double thr) {
    const double d = rel(value, ref);
    rows.push_back({std::move(check), s, h, m, value, ref, d, thr, d < thr});
  };
  for (double s : s_list) {
    check_order(s, Power::positive);
    rows.push_back({"zero-offset", s, 1.0, 0, kernel_value(s, 1.0, 0, Power::positive), 0.0,
                    std::abs(kernel_value(s, 1.0, 0, Power::positive)), 0.0,
                    kernel_value(s, 1.0, 0, Power::positive) == 0.0});
    for (long m = 1; m <= m_quad; ++m)
      push("quadrature", s, 1.0, m, kernel_by_quadrature(s, 1.0, m, Power::positive),
           kernel_value(s, 1.0, m, Power::positive), 1e-8);
    if (s < 0.5)
      for (long m = 0; m <= m_quad; ++m)
        push("quadrature-negative", s, 1.0, m, kernel_by_quadrature(s, 1.0, m, Power::negative),
             kernel_value(s, 1.0, m, Power::negative), 1e-8);
    for (long m = -m_alt; m <= m_alt; ++m)
      if (m != 0) push("alternate", s, 1.0, m, kernel_value_alt(s, m), kernel_value(s, 1.0, m, Power::positive), 1e-12);
    for (double h : {1.0, 0.25}) {
      // Truncated sum plus the tail beyond M, summed from the far end.
      constexpr long M = 100000;
      double sum = 0.0;
      for (long m = M; m >= 1; --m) sum += kernel_value(s, h, m, Power::positive);
      sum = 2.0 * sum + kernel_tail_mass(s, h, M);
      push("kernel-sum", s, h, M, sum, kernel_sum(s, h), 1e-8);
    }
  }
  return rows;
}

namespace {

struct Profile {
  std::vector<double> c, x0, r;
  double operator()(double x) const {
    double v = 0.0;
    for (std::size_t i = 0; i < c.size(); ++i) v += c[i] * bump((x - x0[i]) / r[i]);
    return v;
  }
};

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

double spread(const std::vector<double>& v) {
  std::vector<double> pos;
  for (double x : v)
    if (x > 0.0) pos.push_back(x);
  if (pos.empty()) return 0.0;
  return *std::max_element(pos.begin(), pos.end()) / median(pos);
}

}  // namespace

InequalityReport run_inequalities(double s, double p, const std::vector<double>& hs, int samples,
                                  std::uint64_t seed) {
  check_order(s, Power::negative);
  if (!(p > 1.0 && 2.0 * s * p < 1.0)) throw ConfigError("inequalities: need 1 < p < 1/(2s)");
  InequalityReport rep;
  rep.s = s;
  rep.p = p;
  rep.q = p / (1.0 - 2.0 * s * p);
  rep.h = hs;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  constexpr int kProfiles = 5;
  std::vector<Profile> profiles(kProfiles);
  for (auto& pr : profiles) {
    for (int i = 0; i < 3; ++i) {
      pr.c.push_back(2.0 * unit(rng) - 1.0);
      pr.x0.push_back(unit(rng) - 0.5);
      pr.r.push_back(1.0 + 0.5 * unit(rng));
    }
  }
  // Far field (-Delta_h)^{-s} f_j ~ M K_{-s}^h(j); its l^q mass beyond the window in closed form.
  const double gamma = (1.0 - 2.0 * s) * rep.q;
  const double A = constant_A(s, Power::negative);
  for (double h : hs) {
    const long m = static_cast<long>(std::ceil(2.0 / h));
    const long J = static_cast<long>(std::ceil(16.0 / h));
    const KernelTable table = table_with_radius(s, h, Power::negative, J + m + 1);
    double best = 0.0;
    for (const auto& pr : profiles) {
      GridFunction f(h, Window{-m, m});
      for (long j = -m; j <= m; ++j) f.ref(j) = pr(h * static_cast<double>(j));
      const GridFunction If = frac_integral(f, table, {-J, J});
      double mass = 0.0;
      for (double v : f.values()) mass += v;
      double inner = 0.0;
      for (double v : If.values()) inner += std::pow(std::abs(v), rep.q);
      const double far = std::pow(std::abs(mass) * A * std::pow(h, 2.0 * s), rep.q) *
                         std::pow(static_cast<double>(J) + 0.5, 1.0 - gamma) / (gamma - 1.0);
      const double lq = std::pow(h * (inner + 2.0 * far), 1.0 / rep.q);
      best = std::max(best, lq / f.norm_lp(p));
    }
    rep.hls_ratio.push_back(best);
  }
  const auto [lo, hi] = std::minmax_element(rep.hls_ratio.begin(), rep.hls_ratio.end());
  rep.hls_spread = *hi / *lo - 1.0;

  std::uniform_int_distribution<long> count(1, 48);
  std::uniform_int_distribution<std::size_t> pick(0, hs.size() - 1);
  for (int k = 0; k < samples; ++k) {
    const double h = hs[pick(rng)];
    const long n = count(rng);
    std::vector<double> vals(static_cast<std::size_t>(n));
    for (auto& v : vals) v = 2.0 * unit(rng) - 1.0;
    const GridFunction u(h, 0, vals);
    const KernelTable table = table_with_radius(s, h, Power::positive, n + 1);
    const SobolevPoincare sp = sobolev_poincare_check(u, table);
    rep.sobolev.push_back(sp.sobolev.ratio);
    rep.poincare.push_back(sp.poincare.ratio);
  }
  rep.sobolev_spread = spread(rep.sobolev);
  rep.poincare_spread = spread(rep.poincare);
  return rep;
}

ExtensionReport run_extension(double s, long half_width, double y) {
  check_order(s, Power::negative);
  ExtensionReport rep;
  rep.s = s;
  const Window w{-half_width, half_width};
  const GridFunction d = delta(1.0, 0);
  const double c_dtn = std::tgamma(1.0 - s) / (std::pow(4.0, s - 0.5) * std::tgamma(s));
  const GridFunction dtn = dirichlet_to_neumann(d, s, w, y);
  const KernelTable pos = table_with_radius(s, 1.0, Power::positive, 2 * half_width + 2);
  const GridFunction lap = frac_laplacian(d, pos, w);
  for (long j = w.first; j <= w.last; ++j) rep.dtn_error = std::max(rep.dtn_error, std::abs(dtn.at(j) - c_dtn * lap.at(j)));
  const double c_ntd = std::pow(4.0, s - 0.5) * std::tgamma(s) / std::tgamma(1.0 - s);
  const GridFunction ntd = neumann_to_dirichlet(d, s, w, y);
  const KernelTable neg = table_with_radius(s, 1.0, Power::negative, 2 * half_width + 2);
  const GridFunction inv = frac_integral(d, neg, w);
  for (long j = w.first; j <= w.last; ++j) rep.ntd_error = std::max(rep.ntd_error, std::abs(ntd.at(j) - c_ntd * inv.at(j)));
  return rep;
}

}  // namespace fdlap
