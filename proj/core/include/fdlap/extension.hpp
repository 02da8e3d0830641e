#pragma once

#include <vector>

#include "fdlap/grid_function.hpp"

namespace fdlap {

// Semidiscrete extension values at several heights. values[k][i] belongs to
// heights[k] and to the index window.first + i.
struct ExtensionSlice {
  double s = 0.0;
  double a = 0.0;  // 1 - 2s
  std::vector<double> heights;
  Window window;
  std::vector<std::vector<double>> values;
};

// w_j(y) = y^{2s}/(4^s Gamma(s)) int_0^inf exp(-y^2/4t) exp(t Delta_h) u_j dt / t^{1+s}.
ExtensionSlice extension_dirichlet(const GridFunction& u, double s, const std::vector<double>& heights,
                                   const Window& window);

// v_j(y) = 4^{s-1/2}/Gamma(1-s) int_0^inf exp(-y^2/4t) exp(t Delta_h) f_j dt / t^{1-s}, s < 1/2.
// With this normalization lim_{y->0} v = 4^{s-1/2} Gamma(s)/Gamma(1-s) (-Delta_h)^{-s} f, and
// v = w whenever (-Delta_h)^s u equals f times the same constant.
ExtensionSlice extension_neumann(const GridFunction& f, double s, const std::vector<double>& heights,
                                 const Window& window);

// (w_j(y) - u_j)/y^{2s} for the Dirichlet extension, computed without forming w - u by subtraction.
ExtensionSlice dirichlet_quotient(const GridFunction& u, double s, const std::vector<double>& heights,
                                  const Window& window);

// -2s lim_{y->0} (w_j(y) - u_j)/y^{2s}, by Richardson extrapolation from heights y and y/2
// with error exponent 2 - 2s.
GridFunction dirichlet_to_neumann(const GridFunction& u, double s, const Window& window, double y = 1e-3);

// lim_{y->0} v_j(y), by Richardson extrapolation from heights y and y/2 with error exponent 2s.
GridFunction neumann_to_dirichlet(const GridFunction& f, double s, const Window& window, double y = 1e-3);

}  // namespace fdlap
