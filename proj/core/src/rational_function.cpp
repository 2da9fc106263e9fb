#include "ybfuse/exact/rational_function.hpp"

namespace ybfuse {

namespace {

bool needs_parens(const Polynomial& p) {
  int terms = 0;
  for (const auto& c : p.coefficients()) terms += c.is_zero() ? 0 : 1;
  if (terms > 1) return true;
  // A lone non-unit coefficient on a power reads as a product.
  return terms == 1 && p.degree() > 0 && !p.leading().abs().is_one();
}

}  // namespace

RationalFunction RationalFunction::normalize(Polynomial num, Polynomial den) {
  if (den.is_zero()) throw DivisionByZero();
  if (num.is_zero()) return RationalFunction();
  if (den.is_constant()) {
    return RationalFunction(num * den.leading().inverse(),
                            Polynomial(Rational(1)), 0);
  }
  Polynomial g = gcd(num, den);
  if (!g.is_one()) {
    num = num.divide_exact(g);
    den = den.divide_exact(g);
  }
  Rational lead = den.leading();
  if (!lead.is_one()) {
    Rational inv = lead.inverse();
    num *= inv;
    den *= inv;
  }
  return RationalFunction(std::move(num), std::move(den), 0);
}

RationalFunction RationalFunction::variable() {
  return RationalFunction(Polynomial::variable());
}

Rational RationalFunction::constant_value() const {
  if (!is_constant()) throw Error("rational function is not constant");
  return num_.coefficient(0);
}

Rational RationalFunction::evaluate(const Rational& x) const {
  Rational d = den_(x);
  if (d.is_zero()) throw PoleAtEvaluationPoint(x);
  return num_(x) / d;
}

RationalFunction RationalFunction::compose(const RationalFunction& g) const {
  auto horner = [&g](const Polynomial& p) {
    RationalFunction acc;
    const auto& c = p.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
      acc *= g;
      acc += RationalFunction(*it);
    }
    return acc;
  };
  if (den_.is_one()) return horner(num_);
  return horner(num_) / horner(den_);
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw DivisionByZero();
  Rational lead = num_.leading().inverse();
  return RationalFunction(den_ * lead, num_ * lead, 0);
}

RationalFunction RationalFunction::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  RationalFunction result(Rational(1));
  RationalFunction base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

RationalFunction RationalFunction::operator-() const {
  return RationalFunction(-num_, den_, 0);
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    if (den_.is_one()) {
      num_ += o.num_;
      return *this;
    }
    *this = normalize(num_ + o.num_, den_);
    return *this;
  }
  if (o.den_.is_one()) {
    num_ += o.num_ * den_;
    return *this;  // still coprime: gcd(n + m d, d) = gcd(n, d)
  }
  if (den_.is_one()) {
    *this = RationalFunction(num_ * o.den_ + o.num_, o.den_, 0);
    return *this;
  }
  Polynomial g = gcd(den_, o.den_);
  if (g.is_one()) {
    *this = normalize(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  } else {
    Polynomial a = den_.divide_exact(g);
    Polynomial b = o.den_.divide_exact(g);
    *this = normalize(num_ * b + o.num_ * a, a * o.den_);
  }
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) {
  return *this += -o;
}

RationalFunction operator*(const RationalFunction& a,
                           const RationalFunction& b) {
  if (a.is_zero() || b.is_zero()) return RationalFunction();
  if (a.is_constant()) {
    return RationalFunction(b.num_ * a.num_.leading(), b.den_, 0);
  }
  if (b.is_constant()) {
    return RationalFunction(a.num_ * b.num_.leading(), a.den_, 0);
  }
  // Cross-cancel; the products of monic factors stay monic.
  Polynomial n1 = a.num_, d1 = a.den_, n2 = b.num_, d2 = b.den_;
  Polynomial g1 = gcd(n1, d2);
  if (!g1.is_one()) {
    n1 = n1.divide_exact(g1);
    d2 = d2.divide_exact(g1);
  }
  Polynomial g2 = gcd(n2, d1);
  if (!g2.is_one()) {
    n2 = n2.divide_exact(g2);
    d1 = d1.divide_exact(g2);
  }
  return RationalFunction(n1 * n2, d1 * d2, 0);
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  *this = *this * o;
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
  *this = *this * o.inverse();
  return *this;
}

std::string RationalFunction::to_string(std::string_view var) const {
  std::string n = num_.to_string(var);
  if (den_.is_one()) return n;
  std::string d = den_.to_string(var);
  if (needs_parens(num_)) n = "(" + n + ")";
  if (needs_parens(den_)) d = "(" + d + ")";
  return n + "/" + d;
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& f) {
  return os << f.to_string();
}

}  // namespace ybfuse
