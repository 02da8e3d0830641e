#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace fdlap {

// Closed index range [first, last] on Z.
struct Window {
  long first = 0;
  long last = -1;

  long size() const { return last - first + 1; }
  bool contains(long j) const { return j >= first && j <= last; }
  Window dilate(long r) const { return {first - r, last + r}; }
  bool operator==(const Window&) const = default;
};

Window hull(const Window& a, const Window& b);

// Finitely supported function on Z_h: values u_{offset}, ..., u_{offset+N-1}, zero elsewhere.
class GridFunction {
public:
  GridFunction() = default;
  GridFunction(double h, long offset, std::vector<double> values);
  // Zero function on the window.
  GridFunction(double h, Window w);

  double h() const { return h_; }
  long offset() const { return offset_; }
  long size() const { return static_cast<long>(values_.size()); }
  long first() const { return offset_; }
  long last() const { return offset_ + size() - 1; }
  Window window() const { return {first(), last()}; }
  double x(long j) const { return h_ * static_cast<double>(j); }

  // u_j with the implicit zero extension.
  double at(long j) const;
  double& ref(long j);  // j must lie in the window

  std::span<const double> values() const { return values_; }
  std::span<double> values() { return values_; }

  // Same function stored on a window that contains the old one, or sampled on any window.
  GridFunction on(Window w) const;
  // Smallest window holding every nonzero value (empty window for the zero function).
  Window support() const;
  long support_count() const;

  double norm_lp(double p) const;  // (h sum |u|^p)^{1/p}
  double norm_inf() const;

private:
  double h_ = 1.0;
  long offset_ = 0;
  std::vector<double> values_;
};

GridFunction operator+(const GridFunction& a, const GridFunction& b);
GridFunction operator-(const GridFunction& a, const GridFunction& b);
GridFunction operator*(double c, const GridFunction& a);

// Unit mass at index j (value 1, not 1/h).
GridFunction delta(double h, long j = 0);

// CSV with a two-line comment header carrying h and offset, then columns j,x,value.
void write_csv(std::ostream& os, const GridFunction& u);
GridFunction read_csv(std::istream& is);
void write_csv(const std::string& path, const GridFunction& u);
GridFunction read_csv(const std::string& path);

}  // namespace fdlap
