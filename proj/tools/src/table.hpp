#pragma once

#include <fstream>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "fdlap/grid_function.hpp"
#include "fdlap/report.hpp"

namespace fdlap::cli {

// Empty cells serialize as an empty CSV field or a JSON null.
using Cell = std::variant<std::monostate, double, long, std::string, bool>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

// CSV: header then rows. JSON: an array of objects keyed by column.
void write_table(const Table& t, Format format, std::ostream& os);

// Grid functions keep their own CSV layout; JSON is {"h", "offset", "values"}.
void write_grid(const GridFunction& u, Format format, std::ostream& os);

// stdout for "-", otherwise a file. Failures raise ConfigError naming the path.
class Output {
public:
  explicit Output(std::string path);
  std::ostream& stream();
  void finish();

private:
  std::string path_;
  std::ofstream file_;
};

}  // namespace fdlap::cli
