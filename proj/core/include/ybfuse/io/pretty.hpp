#pragma once

#include <string>
#include <string_view>

#include "ybfuse/linalg/matrix.hpp"

namespace ybfuse {

// Compact display, e.g. "(u-1)/(u+1)", "-1/(u^2+u)".
std::string pretty(const RationalFunction& f, std::string_view var);
std::string pretty(const Rational& r);

// Aligned columns, zero entries shown as ".".
std::string pretty(const FunctionMatrix& m, std::string_view var);
std::string pretty(const RationalMatrix& m);

}  // namespace ybfuse
