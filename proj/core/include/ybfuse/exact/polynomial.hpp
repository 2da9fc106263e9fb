#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ybfuse/exact/rational.hpp"

namespace ybfuse {

// Univariate polynomial over Q, coefficients in ascending degree.
// The zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const Rational& constant);  // NOLINT
  template <std::integral I>
  Polynomial(I constant) : Polynomial(Rational(constant)) {}  // NOLINT
  explicit Polynomial(std::vector<Rational> coefficients);

  static Polynomial variable();
  static Polynomial monomial(const Rational& coefficient, int degree);

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(int i) const;
  const Rational& leading() const { return coeffs_.back(); }

  Rational operator()(const Rational& x) const;

  Polynomial monic() const;
  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& s);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) {
    return a += b;
  }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) {
    return a -= b;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& s) {
    return a *= s;
  }
  friend Polynomial operator*(const Rational& s, Polynomial a) {
    return a *= s;
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

  // Quotient and remainder; throws DivisionByZero on a zero divisor.
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a,
                                                  const Polynomial& b);
  // Division known to be exact.
  Polynomial divide_exact(const Polynomial& b) const;

  std::string to_string(std::string_view var = "t") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

}  // namespace ybfuse
