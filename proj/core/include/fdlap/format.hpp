#pragma once

#include <string>

namespace fdlap {

// Shortest decimal string that reads back to the same double.
std::string fmt_double(double v);

}  // namespace fdlap
