#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "ybfuse/error.hpp"
#include "ybfuse/exact/rational.hpp"
#include "ybfuse/exact/rational_function.hpp"

namespace ybfuse {

inline bool is_zero(const mpz_class& z) { return sgn(z) == 0; }

// Dense row-major matrix over an exact ring.
template <class S>
class Matrix {
 public:
  using value_type = S;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<S> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows * cols) throw SizeMismatch("entry count");
  }
  Matrix(std::initializer_list<std::initializer_list<S>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    for (const auto& r : rows) {
      if (r.size() != cols_) throw SizeMismatch("ragged rows");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = S(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  S& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const S& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  const std::vector<S>& entries() const { return data_; }

  bool is_zero() const {
    for (const auto& e : data_) {
      if (!ybfuse::is_zero(e)) return false;
    }
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    }
    return t;
  }

  template <class F>
  auto map(F&& f) const -> Matrix<decltype(f(std::declval<const S&>()))> {
    using T = decltype(f(std::declval<const S&>()));
    std::vector<T> out;
    out.reserve(data_.size());
    for (const auto& e : data_) out.push_back(f(e));
    return Matrix<T>(rows_, cols_, std::move(out));
  }

  Matrix& operator+=(const Matrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  Matrix& operator*=(const S& s) {
    for (auto& e : data_) e *= s;
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const S& s) { return a *= s; }
  friend Matrix operator*(const S& s, Matrix a) { return a *= s; }
  Matrix operator-() const {
    Matrix m = *this;
    for (auto& e : m.data_) e = -e;
    return m;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  void check_same(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) {
      throw SizeMismatch("matrix shapes differ");
    }
  }
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<S> data_;
};

using RationalMatrix = Matrix<Rational>;
using FunctionMatrix = Matrix<RationalFunction>;

// Product skipping zero entries; result scalar is that of A*B.
template <class A, class B>
auto multiply(const Matrix<A>& a, const Matrix<B>& b)
    -> Matrix<decltype(std::declval<A>() * std::declval<B>())> {
  using T = decltype(std::declval<A>() * std::declval<B>());
  if (a.cols() != b.rows()) throw SizeMismatch("inner dimensions differ");
  Matrix<T> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const A& x = a(i, k);
      if (is_zero(x)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const B& y = b(k, j);
        if (is_zero(y)) continue;
        out(i, j) += x * y;
      }
    }
  }
  return out;
}

template <class S>
Matrix<S> operator*(const Matrix<S>& a, const Matrix<S>& b) {
  return multiply(a, b);
}

// Row-major Kronecker product: index (i_a * rows_b + i_b).
template <class S>
Matrix<S> kron(const Matrix<S>& a, const Matrix<S>& b) {
  Matrix<S> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const S& x = a(i, j);
      if (is_zero(x)) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          if (is_zero(b(k, l))) continue;
          out(i * b.rows() + k, j * b.cols() + l) = x * b(k, l);
        }
      }
    }
  }
  return out;
}

inline FunctionMatrix to_function_matrix(const RationalMatrix& m) {
  return m.map([](const Rational& r) { return RationalFunction(r); });
}

// Entrywise evaluation; throws PoleAtEvaluationPoint.
inline RationalMatrix evaluate(const FunctionMatrix& m, const Rational& x) {
  return m.map([&x](const RationalFunction& f) { return f.evaluate(x); });
}

// Entrywise substitution t -> g(t).
inline FunctionMatrix compose(const FunctionMatrix& m,
                              const RationalFunction& g) {
  return m.map([&g](const RationalFunction& f) {
    return f.is_constant() ? f : f.compose(g);
  });
}

// Monic lcm of all entry denominators.
Polynomial denominator_lcm(const FunctionMatrix& m);

// Requires every entry constant.
RationalMatrix constant_part(const FunctionMatrix& m);

}  // namespace ybfuse
