#include "ybfuse/linalg/elimination.hpp"

#include <algorithm>
#include <random>

namespace ybfuse {

namespace {

// Row-reduces a copy of m; returns pivot columns.
std::vector<std::size_t> pivot_columns(const RationalMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<mpq_class>> a(rows, std::vector<mpq_class>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) a[r][c] = m(r, c).value();
  }
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < rows; ++c) {
    std::size_t p = row;
    while (p < rows && sgn(a[p][c]) == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[row]);
    const mpq_class inv = 1 / a[row][c];
    for (std::size_t r = row + 1; r < rows; ++r) {
      if (sgn(a[r][c]) == 0) continue;
      mpq_class f = a[r][c] * inv;
      for (std::size_t k = c; k < cols; ++k) {
        if (sgn(a[row][k]) != 0) a[r][k] -= f * a[row][k];
      }
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

}  // namespace

Polynomial denominator_lcm(const FunctionMatrix& m) {
  Polynomial l(Rational(1));
  for (const auto& f : m.entries()) {
    const Polynomial& d = f.denominator();
    if (d.is_one()) continue;
    Polynomial g = gcd(l, d);
    l = l * d.divide_exact(g);
  }
  return l;
}

RationalMatrix constant_part(const FunctionMatrix& m) {
  return m.map([](const RationalFunction& f) { return f.constant_value(); });
}

ColumnSpace column_space_basis(const RationalMatrix& m) {
  ColumnSpace cs;
  cs.pivots = pivot_columns(m);
  cs.rank = cs.pivots.size();
  cs.basis = RationalMatrix(m.rows(), cs.rank);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t k = 0; k < cs.rank; ++k) cs.basis(r, k) = m(r, cs.pivots[k]);
  }
  return cs;
}

std::size_t rank(const RationalMatrix& m) { return pivot_columns(m).size(); }

RationalMatrix inverse(const RationalMatrix& m) {
  if (!m.is_square()) throw SizeMismatch("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(2 * n));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) a[r][c] = m(r, c).value();
    a[r][n + r] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(a[p][c]) == 0) ++p;
    if (p == n) throw SingularMatrix("matrix is singular");
    std::swap(a[p], a[c]);
    const mpq_class inv = 1 / a[c][c];
    for (auto& v : a[c]) v *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || sgn(a[r][c]) == 0) continue;
      mpq_class f = a[r][c];
      for (std::size_t k = 0; k < 2 * n; ++k) {
        if (sgn(a[c][k]) != 0) a[r][k] -= f * a[c][k];
      }
    }
  }
  RationalMatrix out(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) out(r, c) = Rational(a[r][n + c]);
  }
  return out;
}

std::size_t rank(const FunctionMatrix& m, std::uint64_t seed) {
  const Polynomial den = denominator_lcm(m);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-1000, 1000), dd(1, 97);
  auto sample = [&]() {
    for (;;) {
      Rational x(num(rng), dd(rng));
      if (!den(x).is_zero()) return x;
    }
  };
  std::size_t r1 = rank(evaluate(m, sample()));
  std::size_t r2 = rank(evaluate(m, sample()));
  if (r1 == r2) return r1;
  return rank_fraction_free(m);
}

std::size_t rank_fraction_free(const FunctionMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<Polynomial>> a(rows, std::vector<Polynomial>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    Polynomial l(Rational(1));
    for (std::size_t c = 0; c < cols; ++c) {
      const Polynomial& d = m(r, c).denominator();
      l = l * d.divide_exact(gcd(l, d));
    }
    for (std::size_t c = 0; c < cols; ++c) {
      const auto& f = m(r, c);
      a[r][c] = f.numerator() * l.divide_exact(f.denominator());
    }
  }
  Polynomial prev(Rational(1));
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < rows; ++c) {
    std::size_t p = row;
    while (p < rows && a[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[row]);
    for (std::size_t r = row + 1; r < rows; ++r) {
      for (std::size_t k = c + 1; k < cols; ++k) {
        a[r][k] = (a[row][c] * a[r][k] - a[r][c] * a[row][k]).divide_exact(prev);
      }
      a[r][c] = Polynomial();
    }
    prev = a[row][c];
    ++row;
  }
  return row;
}

RationalMatrix left_inverse(const RationalMatrix& basis) {
  const std::size_t r = basis.cols();
  ColumnSpace rows_cs = column_space_basis(basis.transpose());
  if (rows_cs.rank != r) {
    throw DegenerateBasis("basis does not have full column rank");
  }
  RationalMatrix square(r, r);
  for (std::size_t k = 0; k < r; ++k) {
    for (std::size_t c = 0; c < r; ++c) square(k, c) = basis(rows_cs.pivots[k], c);
  }
  RationalMatrix inv = inverse(square);
  RationalMatrix l(r, basis.rows());
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t k = 0; k < r; ++k) l(i, rows_cs.pivots[k]) = inv(i, k);
  }
  return l;
}

FunctionMatrix restrict_to_subspace(const FunctionMatrix& m,
                                    const RationalMatrix& basis) {
  if (m.cols() != basis.rows() || !m.is_square()) {
    throw SizeMismatch("operator and basis sizes differ");
  }
  RationalMatrix l = left_inverse(basis);
  FunctionMatrix mb = multiply(m, basis);
  FunctionMatrix x = multiply(l, mb);
  if (multiply(basis, x) != mb) {
    throw SubspaceNotInvariant("operator does not preserve the subspace");
  }
  return x;
}

}  // namespace ybfuse
