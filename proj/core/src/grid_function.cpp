#include "fdlap/grid_function.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "fdlap/errors.hpp"
#include "fdlap/format.hpp"

namespace fdlap {

Window hull(const Window& a, const Window& b) {
  if (a.size() <= 0) return b;
  if (b.size() <= 0) return a;
  return {std::min(a.first, b.first), std::max(a.last, b.last)};
}

GridFunction::GridFunction(double h, long offset, std::vector<double> values)
    : h_(h), offset_(offset), values_(std::move(values)) {
  if (!(h > 0.0) || !std::isfinite(h)) throw DomainError("GridFunction: h must be positive");
  if (values_.empty()) throw ContractViolation("GridFunction: needs at least one value");
  for (double v : values_)
    if (!std::isfinite(v)) throw ContractViolation("GridFunction: values must be finite");
}

GridFunction::GridFunction(double h, Window w)
    : GridFunction(h, w.first, std::vector<double>(static_cast<std::size_t>(std::max<long>(w.size(), 1)), 0.0)) {}

double GridFunction::at(long j) const {
  const long i = j - offset_;
  if (i < 0 || i >= size()) return 0.0;
  return values_[static_cast<std::size_t>(i)];
}

double& GridFunction::ref(long j) {
  const long i = j - offset_;
  if (i < 0 || i >= size()) throw ContractViolation("GridFunction::ref: index outside the window");
  return values_[static_cast<std::size_t>(i)];
}

GridFunction GridFunction::on(Window w) const {
  GridFunction out(h_, w);
  for (long j = w.first; j <= w.last; ++j) out.ref(j) = at(j);
  return out;
}

Window GridFunction::support() const {
  long lo = 0;
  long hi = -1;
  bool any = false;
  for (long i = 0; i < size(); ++i) {
    if (values_[static_cast<std::size_t>(i)] != 0.0) {
      if (!any) lo = i;
      hi = i;
      any = true;
    }
  }
  if (!any) return {offset_, offset_ - 1};
  return {offset_ + lo, offset_ + hi};
}

long GridFunction::support_count() const {
  return static_cast<long>(std::count_if(values_.begin(), values_.end(), [](double v) { return v != 0.0; }));
}

double GridFunction::norm_lp(double p) const {
  if (!(p >= 1.0)) throw DomainError("norm_lp: p must be >= 1");
  if (std::isinf(p)) return norm_inf();
  const double m = norm_inf();
  if (m == 0.0) return 0.0;
  double acc = 0.0;
  for (double v : values_) acc += std::pow(std::abs(v) / m, p);
  return m * std::pow(h_ * acc, 1.0 / p);
}

double GridFunction::norm_inf() const {
  double m = 0.0;
  for (double v : values_) m = std::max(m, std::abs(v));
  return m;
}

namespace {

GridFunction combine(const GridFunction& a, const GridFunction& b, double cb) {
  if (a.h() != b.h()) throw ContractViolation("grid functions live on different meshes");
  GridFunction out = a.on(hull(a.window(), b.window()));
  for (long j = b.first(); j <= b.last(); ++j) out.ref(j) += cb * b.at(j);
  return out;
}

}  // namespace

GridFunction operator+(const GridFunction& a, const GridFunction& b) { return combine(a, b, 1.0); }
GridFunction operator-(const GridFunction& a, const GridFunction& b) { return combine(a, b, -1.0); }

GridFunction operator*(double c, const GridFunction& a) {
  GridFunction out = a;
  for (double& v : out.values()) v *= c;
  return out;
}

GridFunction delta(double h, long j) { return GridFunction(h, j, {1.0}); }

void write_csv(std::ostream& os, const GridFunction& u) {
  os << "# h=" << fmt_double(u.h()) << '\n';
  os << "# offset=" << u.offset() << '\n';
  os << "j,x,value\n";
  for (long j = u.first(); j <= u.last(); ++j)
    os << j << ',' << fmt_double(u.x(j)) << ',' << fmt_double(u.at(j)) << '\n';
}

GridFunction read_csv(std::istream& is) {
  std::string line;
  double h = 0.0;
  bool have_h = false;
  std::vector<std::pair<long, double>> rows;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      const auto eq = line.find('=');
      if (eq == std::string::npos) continue;
      std::string key = line.substr(1, eq - 1);
      key.erase(std::remove(key.begin(), key.end(), ' '), key.end());
      if (key == "h") {
        h = std::stod(line.substr(eq + 1));
        have_h = true;
      }
      continue;
    }
    if (line.rfind("j,", 0) == 0) continue;
    std::stringstream ss(line);
    std::string sj, sx, sv;
    if (!std::getline(ss, sj, ',') || !std::getline(ss, sx, ',') || !std::getline(ss, sv, ','))
      throw ConfigError("grid function CSV: malformed row '" + line + "'");
    rows.emplace_back(std::stol(sj), std::stod(sv));
  }
  if (!have_h) throw ConfigError("grid function CSV: missing '# h=' header");
  if (rows.empty()) throw ConfigError("grid function CSV: no rows");
  std::sort(rows.begin(), rows.end());
  const long lo = rows.front().first;
  const long hi = rows.back().first;
  GridFunction u(h, Window{lo, hi});
  for (const auto& [j, v] : rows) u.ref(j) = v;
  return u;
}

void write_csv(const std::string& path, const GridFunction& u) {
  std::ofstream os(path);
  if (!os) throw ConfigError("cannot open '" + path + "' for writing");
  write_csv(os, u);
}

GridFunction read_csv(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw ConfigError("cannot open '" + path + "' for reading");
  return read_csv(is);
}

}  // namespace fdlap
