#pragma once

#include <ostream>
#include <string>
#include <string_view>

#include "ybfuse/error.hpp"
#include "ybfuse/exact/polynomial.hpp"

namespace ybfuse {

class PoleAtEvaluationPoint : public Error {
 public:
  explicit PoleAtEvaluationPoint(Rational point)
      : Error("pole at evaluation point " + point.to_display()),
        point_(std::move(point)) {}
  const Rational& point() const { return point_; }

 private:
  Rational point_;
};

// Reduced quotient num/den with den monic. Zero is 0/1.
class RationalFunction {
 public:
  RationalFunction() : den_(Rational(1)) {}
  RationalFunction(const Rational& c) : num_(c), den_(Rational(1)) {}  // NOLINT
  template <std::integral I>
  RationalFunction(I c) : RationalFunction(Rational(c)) {}  // NOLINT
  RationalFunction(Polynomial p)  // NOLINT
      : num_(std::move(p)), den_(Rational(1)) {}

  static RationalFunction normalize(Polynomial num, Polynomial den);
  static RationalFunction variable();

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  // Requires is_constant().
  Rational constant_value() const;

  bool has_pole_at(const Rational& x) const { return den_(x).is_zero(); }
  Rational evaluate(const Rational& x) const;
  Rational operator()(const Rational& x) const { return evaluate(x); }

  // f(g(t)).
  RationalFunction compose(const RationalFunction& g) const;

  RationalFunction inverse() const;
  RationalFunction pow(long exponent) const;

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);

  friend RationalFunction operator+(RationalFunction a,
                                    const RationalFunction& b) {
    return a += b;
  }
  friend RationalFunction operator-(RationalFunction a,
                                    const RationalFunction& b) {
    return a -= b;
  }
  friend RationalFunction operator*(const RationalFunction& a,
                                    const RationalFunction& b);
  friend RationalFunction operator/(RationalFunction a,
                                    const RationalFunction& b) {
    return a /= b;
  }
  friend bool operator==(const RationalFunction& a,
                         const RationalFunction& b) = default;

  // Plain text, e.g. "(u - 1)/(u + 1)".
  std::string to_string(std::string_view var = "t") const;

 private:
  RationalFunction(Polynomial num, Polynomial den, int)
      : num_(std::move(num)), den_(std::move(den)) {}
  Polynomial num_;
  Polynomial den_;
};

inline bool is_zero(const RationalFunction& f) { return f.is_zero(); }

std::ostream& operator<<(std::ostream& os, const RationalFunction& f);

}  // namespace ybfuse
