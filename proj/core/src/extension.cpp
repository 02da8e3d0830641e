#include "fdlap/extension.hpp"

#include <cmath>

#include "fdlap/errors.hpp"
#include "fdlap/kernels.hpp"
#include "fdlap/operators.hpp"

namespace fdlap {
namespace {

std::vector<double> decays(const std::vector<double>& heights, double h) {
  std::vector<double> a;
  a.reserve(heights.size());
  for (std::size_t k = 0; k < heights.size(); ++k) {
    const double y = heights[k];
    if (!(y > 0.0) || !std::isfinite(y)) throw ContractViolation("extension: heights must be positive");
    if (k > 0 && !(y > heights[k - 1])) throw ContractViolation("extension: heights must be ascending");
    a.push_back(y * y / (4.0 * h * h));
  }
  return a;
}

ExtensionSlice make_slice(double s, const std::vector<double>& heights, const Window& w,
                          std::vector<std::vector<double>> values) {
  return ExtensionSlice{s, 1.0 - 2.0 * s, heights, w, std::move(values)};
}

}  // namespace

ExtensionSlice extension_dirichlet(const GridFunction& u, double s, const std::vector<double>& heights,
                                   const Window& window) {
  check_order(s, Power::positive);
  const double h = u.h();
  auto I = semigroup_integral(u, window, -1.0 - s, decays(heights, h), false);
  for (std::size_t k = 0; k < heights.size(); ++k) {
    const double c = std::pow(heights[k] / h, 2.0 * s) / (std::pow(4.0, s) * std::tgamma(s));
    for (double& v : I[k]) v *= c;
  }
  return make_slice(s, heights, window, std::move(I));
}

ExtensionSlice dirichlet_quotient(const GridFunction& u, double s, const std::vector<double>& heights,
                                  const Window& window) {
  check_order(s, Power::positive);
  const double h = u.h();
  // int exp(-a/tau) tau^{-1-s} dtau = Gamma(s) a^{-s} absorbs u_j exactly.
  auto I = semigroup_integral(u, window, -1.0 - s, decays(heights, h), true);
  const double c = std::pow(h, -2.0 * s) / (std::pow(4.0, s) * std::tgamma(s));
  for (auto& row : I)
    for (double& v : row) v *= c;
  return make_slice(s, heights, window, std::move(I));
}

ExtensionSlice extension_neumann(const GridFunction& f, double s, const std::vector<double>& heights,
                                 const Window& window) {
  check_order(s, Power::negative);
  const double h = f.h();
  auto I = semigroup_integral(f, window, s - 1.0, decays(heights, h), false);
  const double c = std::pow(4.0, s - 0.5) / std::tgamma(1.0 - s) * std::pow(h, 2.0 * s);
  for (auto& row : I)
    for (double& v : row) v *= c;
  return make_slice(s, heights, window, std::move(I));
}

namespace {

GridFunction richardson(const ExtensionSlice& slice, double h, double exponent, double scale) {
  const double r = std::pow(2.0, exponent);
  GridFunction out(h, slice.window);
  for (long j = slice.window.first; j <= slice.window.last; ++j) {
    const auto i = static_cast<std::size_t>(j - slice.window.first);
    const double fine = slice.values[0][i];
    const double coarse = slice.values[1][i];
    out.ref(j) = scale * (r * fine - coarse) / (r - 1.0);
  }
  return out;
}

}  // namespace

GridFunction dirichlet_to_neumann(const GridFunction& u, double s, const Window& window, double y) {
  const auto q = dirichlet_quotient(u, s, {0.5 * y, y}, window);
  return richardson(q, u.h(), 2.0 - 2.0 * s, -2.0 * s);
}

GridFunction neumann_to_dirichlet(const GridFunction& f, double s, const Window& window, double y) {
  const auto v = extension_neumann(f, s, {0.5 * y, y}, window);
  return richardson(v, f.h(), 2.0 * s, 1.0);
}

}  // namespace fdlap
