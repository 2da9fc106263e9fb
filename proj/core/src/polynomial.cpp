#include "ybfuse/exact/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "ybfuse/error.hpp"

namespace ybfuse {

namespace {

using IntPoly = std::vector<mpz_class>;

// Scales p to an integer polynomial with content 1 and positive leading term.
IntPoly primitive_part(const Polynomial& p) {
  mpz_class l = denominator_lcm(p.coefficients());
  IntPoly out;
  out.reserve(p.coefficients().size());
  mpz_class g = 0;
  for (const Rational& c : p.coefficients()) {
    mpz_class v = c.numerator() * (l / c.denominator());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    out.push_back(std::move(v));
  }
  if (out.back() < 0) g = -g;
  for (auto& v : out) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  return out;
}

void make_primitive(IntPoly& p) {
  mpz_class g = 0;
  for (const auto& v : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  if (p.back() < 0) g = -g;
  if (g == 1) return;
  for (auto& v : p) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

void trim_int(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Pseudo-remainder of a by b, made primitive.
IntPoly pseudo_remainder(IntPoly a, const IntPoly& b) {
  const std::size_t db = b.size() - 1;
  const mpz_class& lb = b.back();
  while (a.size() >= b.size()) {
    mpz_class la = a.back();
    std::size_t shift = a.size() - b.size();
    for (auto& v : a) v *= lb;
    for (std::size_t i = 0; i <= db; ++i) a[i + shift] -= la * b[i];
    trim_int(a);
  }
  if (!a.empty()) make_primitive(a);
  return a;
}

}  // namespace

Polynomial::Polynomial(const Rational& constant) {
  if (!constant.is_zero()) coeffs_.push_back(constant);
}

Polynomial::Polynomial(std::vector<Rational> coefficients)
    : coeffs_(std::move(coefficients)) {
  trim();
}

Polynomial Polynomial::variable() { return monomial(Rational(1), 1); }

Polynomial Polynomial::monomial(const Rational& coefficient, int degree) {
  if (coefficient.is_zero()) return {};
  std::vector<Rational> c(static_cast<std::size_t>(degree) + 1);
  c.back() = coefficient;
  Polynomial p;
  p.coeffs_ = std::move(c);
  return p;
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Polynomial::coefficient(int i) const {
  if (i < 0 || i > degree()) return {};
  return coeffs_[static_cast<std::size_t>(i)];
}

Rational Polynomial::operator()(const Rational& x) const {
  mpq_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x.value();
    acc += it->value();
  }
  return Rational(std::move(acc));
}

Polynomial Polynomial::monic() const {
  if (is_zero() || leading().is_one()) return *this;
  return *this * leading().inverse();
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& c : p.coeffs_) c = -c;
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
  if (s.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= s;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.coeffs_.size() == 1) return b * a.coeffs_[0];
  if (b.coeffs_.size() == 1) return a * b.coeffs_[0];
  std::vector<mpq_class> acc(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      acc[i + j] += a.coeffs_[i].value() * b.coeffs_[j].value();
    }
  }
  std::vector<Rational> c;
  c.reserve(acc.size());
  for (auto& v : acc) c.emplace_back(std::move(v));
  return Polynomial(std::move(c));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& a,
                                                     const Polynomial& b) {
  if (b.is_zero()) throw DivisionByZero();
  if (a.degree() < b.degree()) return {Polynomial(), a};
  std::vector<mpq_class> r;
  r.reserve(a.coeffs_.size());
  for (const auto& c : a.coeffs_) r.push_back(c.value());
  const std::size_t db = b.coeffs_.size() - 1;
  std::vector<Rational> q(a.coeffs_.size() - db);
  const mpq_class inv_lead = 1 / b.leading().value();
  for (std::size_t k = q.size(); k-- > 0;) {
    mpq_class f = r[k + db] * inv_lead;
    if (sgn(f) != 0) {
      for (std::size_t i = 0; i <= db; ++i) r[k + i] -= f * b.coeffs_[i].value();
    }
    q[k] = Rational(std::move(f));
  }
  r.resize(db);
  std::vector<Rational> rem;
  rem.reserve(r.size());
  for (auto& v : r) rem.emplace_back(std::move(v));
  return {Polynomial(std::move(q)), Polynomial(std::move(rem))};
}

Polynomial Polynomial::divide_exact(const Polynomial& b) const {
  auto [q, r] = divmod(*this, b);
  if (!r.is_zero()) throw Error("inexact polynomial division");
  return q;
}

std::string Polynomial::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& c = coeffs_[k];
    if (c.is_zero()) continue;
    Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag.to_display();
      continue;
    }
    if (!mag.is_one()) {
      os << mag.to_display();
      os << "*";
    }
    os << var;
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Polynomial(Rational(1));
  IntPoly x = primitive_part(a);
  IntPoly y = primitive_part(b);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    if (y.size() == 1) return Polynomial(Rational(1));
    IntPoly r = pseudo_remainder(std::move(x), y);
    x = std::move(y);
    y = std::move(r);
  }
  std::vector<Rational> c;
  c.reserve(x.size());
  for (auto& v : x) c.emplace_back(v);
  return Polynomial(std::move(c)).monic();
}

}  // namespace ybfuse
