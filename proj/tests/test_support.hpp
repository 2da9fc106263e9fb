#pragma once

#include <random>
#include <vector>

#include "ybfuse/exact/rational_function.hpp"
#include "ybfuse/linalg/matrix.hpp"

namespace ybfuse::testing {

inline RationalFunction t() { return RationalFunction::variable(); }

inline Polynomial poly(std::vector<Rational> c) { return Polynomial(std::move(c)); }

inline Polynomial random_poly(std::mt19937_64& rng, int max_degree) {
  std::uniform_int_distribution<int> deg(0, max_degree), coef(-9, 9);
  std::vector<Rational> c;
  const int d = deg(rng);
  for (int i = 0; i <= d; ++i) c.emplace_back(coef(rng), 1 + (rng() % 4));
  return Polynomial(std::move(c));
}

inline RationalMatrix random_matrix(std::mt19937_64& rng, std::size_t r,
                                    std::size_t c) {
  std::uniform_int_distribution<int> coef(-5, 5);
  RationalMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) m(i, j) = Rational(coef(rng));
  }
  return m;
}

inline FunctionMatrix fm(const RationalMatrix& m) { return to_function_matrix(m); }

}  // namespace ybfuse::testing
