#include "fdlap/operators.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "fdlap/errors.hpp"
#include "fdlap/quadrature.hpp"
#include "fdlap/specialfn.hpp"

namespace fdlap {
namespace {

// Nonzero part of u, or a single zero point when u vanishes.
GridFunction trimmed(const GridFunction& u) {
  const Window s = u.support();
  if (s.size() <= 0) return GridFunction(u.h(), u.offset(), {0.0});
  return u.on(s);
}

// Kernel samples k(d) for d = w.first - u.last, ..., w.last - u.first.
template <class K>
std::vector<double> offsets(const GridFunction& u, const Window& w, K&& k) {
  const long lo = w.first - u.last();
  const long hi = w.last - u.first();
  std::vector<double> out(static_cast<std::size_t>(hi - lo + 1));
  for (long d = lo; d <= hi; ++d) out[static_cast<std::size_t>(d - lo)] = k(d);
  return out;
}

long max_offset(const GridFunction& u, const Window& w) {
  return std::max(std::abs(w.first - u.last()), std::abs(w.last - u.first()));
}

void check_table(const KernelTable& table, double h, Power power) {
  if (table.power() != power) throw ContractViolation("kernel table has the wrong sign of the power");
  if (table.h() != h) throw ContractViolation("kernel table and grid function use different h");
}

}  // namespace

GridFunction discrete_laplacian(const GridFunction& u) {
  GridFunction out(u.h(), u.window().dilate(1));
  const double inv = 1.0 / (u.h() * u.h());
  for (long j = out.first(); j <= out.last(); ++j) out.ref(j) = (2.0 * u.at(j) - u.at(j + 1) - u.at(j - 1)) * inv;
  return out;
}

Window default_window(const GridFunction& u, const KernelTable& table) {
  const Window s = trimmed(u).window();
  // Every offset between the dilated window and supp(u) must stay within the radius.
  const long room = std::max(0L, table.radius() - (s.size() - 1));
  return s.dilate(std::min(room, s.size()));
}

GridFunction frac_laplacian(const GridFunction& u, const KernelTable& table, std::optional<Window> window,
                            ConvPath path) {
  check_table(table, u.h(), Power::positive);
  const GridFunction v = trimmed(u);
  const Window w = window ? *window : default_window(u, table);
  if (w.size() <= 0) throw ContractViolation("frac_laplacian: empty output window");
  if (max_offset(v, w) > table.radius())
    throw ContractViolation("frac_laplacian: output window needs kernel offsets beyond the table radius");
  const auto k = offsets(v, w, [&](long d) { return table(d); });
  const auto conv = toeplitz_apply(k, v.values(), w.size(), path);
  const double sigma = kernel_sum(table.s(), table.h());
  GridFunction out(u.h(), w);
  for (long j = w.first; j <= w.last; ++j) out.ref(j) = sigma * v.at(j) - conv[static_cast<std::size_t>(j - w.first)];
  return out;
}

GridFunction frac_integral(const GridFunction& f, const KernelTable& table, const Window& w, ConvPath path) {
  check_order(table.s(), Power::negative);
  check_table(table, f.h(), Power::negative);
  if (w.size() <= 0) throw ContractViolation("frac_integral: empty output window");
  const GridFunction v = trimmed(f);
  if (max_offset(v, w) > table.radius())
    throw ContractViolation("frac_integral: output window needs kernel offsets beyond the table radius");
  const auto k = offsets(v, w, [&](long d) { return table(d); });
  const auto conv = toeplitz_apply(k, v.values(), w.size(), path);
  return GridFunction(f.h(), w.first, conv);
}

GridFunction frac_laplacian_cosine(double omega, double phase, double s, double h, const Window& window) {
  check_order(s, Power::positive);
  const double two_pi = 2.0 * std::numbers::pi;
  double theta = std::remainder(omega * h, two_pi);
  theta = std::abs(theta);
  GridFunction out(h, window);
  if (theta == 0.0) return out;
  // 2 sum_{m>=1} K(m)(1 - cos m theta): direct part up to M, then the exact mass tail and an
  // Euler transform of the oscillatory tail in powers of z/(1-z), z = e^{i theta}.
  const long M = static_cast<long>(std::ceil(std::max(1000.0, 60.0 / theta)));
  if (M > 50'000'000) throw NumericalError("frac_laplacian_cosine: frequency too close to zero", theta);
  const double A = constant_A(s, Power::positive) * std::pow(h, -2.0 * s);
  double direct = 0.0;
  for (long m = M; m >= 1; --m) {
    const double dm = static_cast<double>(m);
    direct += A * gamma_ratio(dm, -s, 1.0 + s) * (1.0 - std::cos(theta * dm));
  }
  const double mass_tail = 0.5 * kernel_tail_mass(s, h, M);
  const std::complex<double> z = std::polar(1.0, theta);
  const std::complex<double> q = z / (1.0 - z);
  const double n = static_cast<double>(M + 1);
  std::complex<double> osc = 0.0;
  std::complex<double> qk = 1.0;
  double rising = 1.0;  // (1+2s)_k
  for (int k = 0; k < 40; ++k) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    const double dk = sign * rising * A * gamma_ratio(n, -s, 1.0 + s + k);
    const std::complex<double> term = qk * dk;
    osc += term;
    if (std::abs(term) < 1e-18 * std::abs(osc)) break;
    qk *= q;
    rising *= (1.0 + 2.0 * s + k);
  }
  osc *= std::pow(z, n) / (1.0 - z);
  const double symbol = 2.0 * direct + 2.0 * mass_tail - 2.0 * osc.real();
  for (long j = window.first; j <= window.last; ++j) out.ref(j) = symbol * std::cos(omega * h * static_cast<double>(j) + phase);
  return out;
}

GridFunction heat_semigroup(const GridFunction& u, double t) {
  if (!(t >= 0.0)) throw DomainError("heat_semigroup: t must be >= 0");
  if (t == 0.0) return u;
  const double tau = t / (u.h() * u.h());
  const GridFunction v = trimmed(u);
  const long M = heat_kernel_radius(tau, 1e-14);
  const Window w = v.window().dilate(M);
  const auto g = heat_kernel_orders(tau, max_offset(v, w));
  const auto k = offsets(v, w, [&](long d) { return g[static_cast<std::size_t>(std::abs(d))]; });
  return GridFunction(u.h(), w.first, toeplitz_apply(k, v.values(), w.size()));
}

std::vector<std::vector<double>> semigroup_integral(const GridFunction& u_in, const Window& w, double beta,
                                                    const std::vector<double>& decay, bool subtract,
                                                    double rel_tol) {
  if (w.size() <= 0) throw ContractViolation("semigroup_integral: empty window");
  for (double a : decay)
    if (!(a >= 0.0)) throw ContractViolation("semigroup_integral: decay parameters must be >= 0");
  if (subtract && beta >= -1.0) throw DomainError("semigroup_integral: subtracted form needs beta < -1");
  const GridFunction u = trimmed(u_in);
  const std::size_t na = decay.size();
  const std::size_t nw = static_cast<std::size_t>(w.size());
  const long D = max_offset(u, w);
  const double cu = subtract ? 1.0 : 0.0;
  std::vector<std::vector<double>> result(na, std::vector<double>(nw, 0.0));

  // Head, tau in [0, tau0]: exp(tau Delta) u = sum_k tau^k Delta^k u / k!.
  constexpr double tau0 = 0.5;
  constexpr int kTaylor = 48;
  std::vector<std::vector<double>> taylor(kTaylor, std::vector<double>(nw));
  {
    GridFunction p(1.0, u.offset(), std::vector<double>(u.values().begin(), u.values().end()));
    for (int k = 0; k < kTaylor; ++k) {
      for (std::size_t i = 0; i < nw; ++i) taylor[static_cast<std::size_t>(k)][i] = p.at(w.first + static_cast<long>(i));
      p = -1.0 * discrete_laplacian(p);
    }
  }
  const int k0 = subtract ? 1 : 0;
  double log_fact = 0.0;
  for (int k = 0; k < kTaylor; ++k) {
    if (k > 0) log_fact += std::log(static_cast<double>(k));
    if (k < k0) continue;
    const double e = k + beta + 1.0;
    for (std::size_t ia = 0; ia < na; ++ia) {
      if (decay[ia] != 0.0) continue;
      for (std::size_t i = 0; i < nw; ++i) {
        const double d = taylor[static_cast<std::size_t>(k)][i];
        if (d == 0.0) continue;
        if (e <= 0.0) throw DomainError("semigroup_integral: integrand not integrable at t = 0");
        result[ia][i] += d * std::exp(e * std::log(tau0) - log_fact) / e;
      }
    }
  }
  const double amax = decay.empty() ? 0.0 : *std::max_element(decay.begin(), decay.end());
  double amin_pos = INFINITY;
  for (double a : decay)
    if (a > 0.0) amin_pos = std::min(amin_pos, a);

  std::vector<double> acc(na * nw);
  QuadOptions opt;
  opt.abs_tol = 0.0;
  opt.rel_tol = rel_tol;
  auto accumulate = [&](const std::vector<double>& part) {
    for (std::size_t ia = 0; ia < na; ++ia)
      for (std::size_t i = 0; i < nw; ++i) result[ia][i] += part[ia * nw + i];
  };
  if (std::isfinite(amin_pos)) {
    std::vector<double> g(nw);
    auto head = [&](double tau, std::span<double> out) {
      for (std::size_t i = 0; i < nw; ++i) {
        double sum = 0.0;
        double c = 1.0;
        for (int k = 0; k < kTaylor; ++k) {
          if (k >= k0) sum += c * taylor[static_cast<std::size_t>(k)][i];
          c *= tau / (k + 1.0);
        }
        g[i] = sum;
      }
      const double pw = std::pow(tau, beta);
      for (std::size_t ia = 0; ia < na; ++ia) {
        const double f = decay[ia] > 0.0 ? pw * std::exp(-decay[ia] / tau) : 0.0;
        for (std::size_t i = 0; i < nw; ++i) out[ia * nw + i] = f * g[i];
      }
    };
    double hi = tau0;
    while (hi > amin_pos / 750.0) {
      integrate_gl(head, 0.5 * hi, hi, acc, opt);
      accumulate(acc);
      hi *= 0.5;
    }
  }

  // Middle, dyadic panels up to tau_end where the Hankel expansion takes over.
  const double dd = static_cast<double>(D);
  const double tau_end_min = std::max({1e4 * std::max(1.0, dd * dd), 1e4 * amax, 1e4});
  std::vector<double> conv_kernel;
  auto middle = [&](double tau, std::span<double> out) {
    const auto gk = heat_kernel_orders(tau, D);
    const auto k = offsets(u, w, [&](long d) { return gk[static_cast<std::size_t>(std::abs(d))]; });
    const auto conv = toeplitz_apply(k, u.values(), w.size());
    const double pw = std::pow(tau, beta);
    for (std::size_t ia = 0; ia < na; ++ia) {
      const double f = pw * std::exp(-decay[ia] / tau);
      for (std::size_t i = 0; i < nw; ++i)
        out[ia * nw + i] = f * (conv[i] - cu * u.at(w.first + static_cast<long>(i)));
    }
  };
  double lo = tau0;
  while (lo < tau_end_min) {
    integrate_gl(middle, lo, 2.0 * lo, acc, opt);
    accumulate(acc);
    lo *= 2.0;
  }

  // Tail: G(d, tau) ~ (4 pi tau)^{-1/2} sum_i c_i(d) tau^{-i}, exp(-a/tau) = sum_n (-a/tau)^n / n!.
  const double te = lo;
  constexpr int kHankel = 7;
  constexpr int kDecay = 5;
  auto power_tail = [&](double p) { return std::pow(te, p + 1.0) / (-(p + 1.0)); };
  std::vector<std::vector<double>> hank(static_cast<std::size_t>(2 * D + 1));
  for (long d = -D; d <= D; ++d) {
    auto& c = hank[static_cast<std::size_t>(d + D)];
    c.resize(kHankel);
    const double mu = 4.0 * static_cast<double>(d) * static_cast<double>(d);
    double a = 1.0;
    for (int i = 0; i < kHankel; ++i) {
      if (i > 0) {
        const double odd = 2.0 * i - 1.0;
        a *= -(mu - odd * odd) / (8.0 * i);
      }
      c[static_cast<std::size_t>(i)] = a / std::pow(2.0, i);
    }
  }
  const double inv_sqrt = 1.0 / std::sqrt(4.0 * std::numbers::pi);
  for (std::size_t ia = 0; ia < na; ++ia) {
    for (std::size_t i = 0; i < nw; ++i) {
      const long j = w.first + static_cast<long>(i);
      double tail = 0.0;
      double an = 1.0;  // (-a)^n / n!
      for (int n = 0; n < kDecay; ++n) {
        if (n > 0) an *= -decay[ia] / n;
        double heat = 0.0;
        for (long m = u.first(); m <= u.last(); ++m) {
          const double um = u.at(m);
          if (um == 0.0) continue;
          const auto& c = hank[static_cast<std::size_t>(j - m + D)];
          double sum = 0.0;
          for (int q = 0; q < kHankel; ++q) sum += c[static_cast<std::size_t>(q)] * power_tail(beta - 0.5 - q - n);
          heat += um * sum;
        }
        tail += an * (heat * inv_sqrt - cu * u.at(j) * power_tail(beta - n));
        if (decay[ia] == 0.0) break;
      }
      result[ia][i] += tail;
    }
  }
  return result;
}

GridFunction frac_laplacian_by_semigroup(const GridFunction& u, double s, const Window& w, double rel_tol) {
  check_order(s, Power::positive);
  const auto I = semigroup_integral(u, w, -1.0 - s, {0.0}, true, rel_tol);
  // 1/Gamma(-s) = -s/Gamma(1-s); dt/t^{1+s} = h^{-2s} dtau/tau^{1+s}.
  const double scale = -s / std::tgamma(1.0 - s) * std::pow(u.h(), -2.0 * s);
  GridFunction out(u.h(), w);
  for (long j = w.first; j <= w.last; ++j) out.ref(j) = scale * I[0][static_cast<std::size_t>(j - w.first)];
  return out;
}

GridFunction frac_integral_by_semigroup(const GridFunction& f, double s, const Window& w, double rel_tol) {
  check_order(s, Power::negative);
  const auto I = semigroup_integral(f, w, s - 1.0, {0.0}, false, rel_tol);
  const double scale = std::pow(f.h(), 2.0 * s) / std::tgamma(s);
  GridFunction out(f.h(), w);
  for (long j = w.first; j <= w.last; ++j) out.ref(j) = scale * I[0][static_cast<std::size_t>(j - w.first)];
  return out;
}

GridFunction multiplier_oracle(const GridFunction& u_in, double s, const Window& w) {
  if (!(s > 0.0 && s <= 1.0)) throw DomainError("multiplier_oracle: s must lie in (0,1]");
  if (w.size() <= 0) throw ContractViolation("multiplier_oracle: empty window");
  const GridFunction u = trimmed(u_in);
  const std::size_t nw = static_cast<std::size_t>(w.size());
  const long dlo = u.first() - w.last;
  const long dhi = u.last() - w.first;
  std::vector<double> cosines(static_cast<std::size_t>(dhi - dlo + 1));
  // (1/pi) int_0^pi (4 sin^2(phi/2))^s sum_k u_k cos((k-j) phi) dphi, scaled by h^{-2s}.
  auto f = [&](double phi, std::span<double> out) {
    for (long d = dlo; d <= dhi; ++d) cosines[static_cast<std::size_t>(d - dlo)] = std::cos(static_cast<double>(d) * phi);
    const double sym = std::pow(2.0 * std::sin(0.5 * phi), 2.0 * s);
    for (std::size_t i = 0; i < nw; ++i) {
      const long j = w.first + static_cast<long>(i);
      double acc = 0.0;
      for (long k = u.first(); k <= u.last(); ++k) acc += u.at(k) * cosines[static_cast<std::size_t>(k - j - dlo)];
      out[i] = sym * acc;
    }
  };
  QuadOptions opt;
  opt.abs_tol = 1e-15 * std::max(1.0, u.norm_inf());
  opt.rel_tol = 1e-13;
  std::vector<double> total(nw, 0.0), part(nw);
  double hi = std::numbers::pi;
  for (int i = 0; i < 64; ++i) {
    integrate_gl(f, 0.5 * hi, hi, part, opt);
    for (std::size_t q = 0; q < nw; ++q) total[q] += part[q];
    hi *= 0.5;
  }
  const double scale = std::pow(u.h(), -2.0 * s) / std::numbers::pi;
  GridFunction out(u.h(), w);
  for (std::size_t q = 0; q < nw; ++q) out.ref(w.first + static_cast<long>(q)) = scale * total[q];
  return out;
}

GridFunction discrete_derivative(const GridFunction& u, Direction dir) {
  const Window w = dir == Direction::plus ? Window{u.first() - 1, u.last()} : Window{u.first(), u.last() + 1};
  GridFunction out(u.h(), w);
  const double inv = 1.0 / u.h();
  for (long j = w.first; j <= w.last; ++j)
    out.ref(j) = dir == Direction::plus ? (u.at(j + 1) - u.at(j)) * inv : (u.at(j) - u.at(j - 1)) * inv;
  return out;
}

HolderSeminorm holder_seminorm(const GridFunction& u, int k, double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw DomainError("holder_seminorm: alpha must lie in (0,1]");
  if (k < 0) throw DomainError("holder_seminorm: k must be >= 0");
  HolderSeminorm out{k, alpha, 0.0};
  for (int gamma = 0; gamma <= k; ++gamma) {
    GridFunction v = u;
    for (int i = 0; i < gamma; ++i) v = discrete_derivative(v, Direction::plus);
    for (int i = 0; i < k - gamma; ++i) v = discrete_derivative(v, Direction::minus);
    const Window w{u.first() + (k - gamma), u.last() - gamma};
    if (w.size() < 2) continue;
    v = v.on(w);
    const auto vals = v.values();
    const long n = v.size();
    std::vector<double> dist(static_cast<std::size_t>(n));
    for (long d = 1; d < n; ++d) dist[static_cast<std::size_t>(d)] = std::pow(u.h() * static_cast<double>(d), alpha);
    double best = 0.0;
    for (long i = 0; i < n; ++i)
      for (long j = i + 1; j < n; ++j)
        best = std::max(best, std::abs(vals[static_cast<std::size_t>(i)] - vals[static_cast<std::size_t>(j)]) /
                                  dist[static_cast<std::size_t>(j - i)]);
    out.value = std::max(out.value, best);
  }
  return out;
}

double bilinear_form(const GridFunction& u, const GridFunction& v, const KernelTable& table) {
  check_table(table, u.h(), Power::positive);
  if (u.h() != v.h()) throw ContractViolation("bilinear_form: different meshes");
  const Window S = hull(u.window(), v.window());
  if (S.size() - 1 > table.radius()) throw ContractViolation("bilinear_form: support wider than the table radius");
  const GridFunction uu = u.on(S);
  const GridFunction vv = v.on(S);
  const double sigma = kernel_sum(table.s(), table.h());
  const long n = S.size();
  // Pairs inside S, then pairs with exactly one point outside S (closed form via Sigma).
  double inside = 0.0;
  double outside = 0.0;
  for (long i = 0; i < n; ++i) {
    const double ui = uu.values()[static_cast<std::size_t>(i)];
    const double vi = vv.values()[static_cast<std::size_t>(i)];
    double ksum = 0.0;
    for (long j = 0; j < n; ++j) {
      if (j == i) continue;
      const double k = table(i - j);
      ksum += k;
      if (j > i) {
        inside += (ui - uu.values()[static_cast<std::size_t>(j)]) * (vi - vv.values()[static_cast<std::size_t>(j)]) * k;
      }
    }
    outside += ui * vi * (sigma - ksum);
  }
  return u.h() * (inside + outside);
}

SobolevPoincare sobolev_poincare_check(const GridFunction& u, const KernelTable& table) {
  check_order(table.s(), Power::negative);
  const double s = table.s();
  const double energy = std::max(0.0, bilinear_form(u, u, table));
  const double half = std::sqrt(energy);
  auto ratio = [](double l, double r) { return r == 0.0 ? 0.0 : l / r; };
  SobolevPoincare out;
  out.sobolev.lhs = u.norm_lp(2.0 / (1.0 - 2.0 * s));
  out.sobolev.rhs = half;
  out.sobolev.ratio = ratio(out.sobolev.lhs, out.sobolev.rhs);
  out.poincare.lhs = u.norm_lp(2.0);
  out.poincare.rhs = std::pow(u.h(), s) * std::pow(static_cast<double>(u.support_count()), s) * half;
  out.poincare.ratio = ratio(out.poincare.lhs, out.poincare.rhs);
  return out;
}

}  // namespace fdlap
