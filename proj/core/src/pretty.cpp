#include "ybfuse/io/pretty.hpp"

#include <algorithm>
#include <sstream>

namespace ybfuse {

namespace {

std::string compact(std::string s) {
  s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
  return s;
}

std::string grid(const std::vector<std::string>& cells, std::size_t rows,
                 std::size_t cols) {
  std::vector<std::size_t> width(cols, 1);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      width[c] = std::max(width[c], cells[r * cols + c].size());
    }
  }
  std::ostringstream os;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      const std::string& s = cells[r * cols + c];
      if (c > 0) os << "  ";
      os << std::string(width[c] - s.size(), ' ') << s;
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace

std::string pretty(const RationalFunction& f, std::string_view var) {
  return compact(f.to_string(var));
}

std::string pretty(const Rational& r) { return r.to_display(); }

std::string pretty(const FunctionMatrix& m, std::string_view var) {
  std::vector<std::string> cells;
  for (const auto& e : m.entries()) {
    cells.push_back(e.is_zero() ? "." : pretty(e, var));
  }
  return grid(cells, m.rows(), m.cols());
}

std::string pretty(const RationalMatrix& m) {
  std::vector<std::string> cells;
  for (const auto& e : m.entries()) {
    cells.push_back(e.is_zero() ? "." : pretty(e));
  }
  return grid(cells, m.rows(), m.cols());
}

}  // namespace ybfuse
