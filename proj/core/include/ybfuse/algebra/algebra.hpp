#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ybfuse/combinatorics/tableau.hpp"
#include "ybfuse/exact/rational_function.hpp"
#include "ybfuse/kernels/kernel.hpp"
#include "ybfuse/linalg/matrix.hpp"
#include "ybfuse/permutation.hpp"

namespace ybfuse {

// C S_n: basis of permutations, product composes right to left.
struct SymmetricGroupRule {
  friend bool operator==(const SymmetricGroupRule&,
                         const SymmetricGroupRule&) = default;
};

// H_n(q) in the T_w basis.
struct HeckeRule {
  Rational q;
  friend bool operator==(const HeckeRule&, const HeckeRule&) = default;
};

// Finite combination sum_w c_w b_w with coefficients in Q(t); zero
// coefficients are never stored.
template <class Rule>
class AlgebraElement {
 public:
  using Terms = std::map<Permutation, RationalFunction>;

  AlgebraElement() = default;
  explicit AlgebraElement(int n, Rule rule = {}) : n_(n), rule_(std::move(rule)) {}

  static AlgebraElement identity(int n, Rule rule = {}) {
    return basis(Permutation::identity(n), std::move(rule));
  }
  static AlgebraElement basis(const Permutation& w, Rule rule = {}) {
    AlgebraElement e(w.size(), std::move(rule));
    e.terms_.emplace(w, RationalFunction(1));
    return e;
  }

  int n() const { return n_; }
  const Rule& rule() const { return rule_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  RationalFunction coefficient(const Permutation& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? RationalFunction() : it->second;
  }

  void add_term(const Permutation& w, const RationalFunction& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(w, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  template <class F>
  AlgebraElement map_coefficients(F&& f) const {
    AlgebraElement out(n_, rule_);
    for (const auto& [w, c] : terms_) out.add_term(w, f(c));
    return out;
  }

  AlgebraElement& operator+=(const AlgebraElement& o) {
    check(o);
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
  }
  AlgebraElement& operator-=(const AlgebraElement& o) {
    check(o);
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
  }
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) {
    return a += b;
  }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) {
    return a -= b;
  }
  friend AlgebraElement operator*(const RationalFunction& s,
                                  const AlgebraElement& a) {
    return a.map_coefficients([&s](const RationalFunction& c) { return s * c; });
  }
  friend AlgebraElement operator*(const AlgebraElement& a,
                                  const RationalFunction& s) {
    return s * a;
  }
  friend bool operator==(const AlgebraElement&,
                         const AlgebraElement&) = default;

  void check(const AlgebraElement& o) const {
    if (n_ != o.n_ || !(rule_ == o.rule_)) {
      throw SizeMismatch("algebra elements live in different algebras");
    }
  }

 private:
  int n_ = 0;
  Rule rule_{};
  Terms terms_;
};

using SymGroupElement = AlgebraElement<SymmetricGroupRule>;
using HeckeElement = AlgebraElement<HeckeRule>;

SymGroupElement operator*(const SymGroupElement& a, const SymGroupElement& b);
HeckeElement operator*(const HeckeElement& a, const HeckeElement& b);

// sigma_i T_w by the generator rule.
HeckeElement hecke_left_generator(int i, const HeckeElement& x);
HeckeElement hecke_generator(int n, int i, const Rational& q);
HeckeElement hecke_generator_inverse(int n, int i, const Rational& q);
// sigma_i + (q - q^-1)/(a^-1 - 1) with a a rational function.
HeckeElement baxterized_hecke(int n, int i, const Rational& q,
                              const RationalFunction& a);
// 1 - (i,j)/u.
SymGroupElement baxterized_sym(int n, int i, int j, const RationalFunction& u);

// Consecutive evaluation of prod_{i<j} (1 - (i,j)/(c_i - c_j)).
SymGroupElement phi_consecutive(const ContentString& c);
// Direct product at contents with no pole.
SymGroupElement phi_direct(const ContentString& c);
// prod_i (s_i - 1/(c_1 - c_{i+1})) ... (s_1 - 1/(c_i - c_{i+1})), direct.
SymGroupElement phi_tilde_direct(const ContentString& c);

// f(lambda) Phi(contents); asserts idempotency and the ideal dimension.
SymGroupElement e_tableau(const StandardTableau& t);

// Consecutive evaluation of the bracketed product of Baxterized elements.
HeckeElement psi_consecutive(const Rational& q, const ContentString& alphas);
// sigma_1 (sigma_2 sigma_1) ... (sigma_{n-1} ... sigma_1).
HeckeElement t_longest(int n, const Rational& q);
HeckeElement t_longest_inverse(int n, const Rational& q);
// f^(q)(lambda) Psi(quantum contents) T_{w_n}^{-1}; asserts as e_tableau.
HeckeElement e_q_tableau(const StandardTableau& t, const Rational& q);

// Matrix of y -> y x on the algebra, columns indexed by basis elements.
RationalMatrix right_regular_matrix(const SymGroupElement& x);
RationalMatrix right_regular_matrix(const HeckeElement& x);

struct IdempotentReport {
  bool idempotent_after_scaling = false;
  Rational scale;
  bool invertible = false;
  std::size_t left_ideal_dim = 0;
};

// Coefficients must be constant.
IdempotentReport idempotent_analysis(const SymGroupElement& x);
IdempotentReport idempotent_analysis(const HeckeElement& x);

struct ScanEntry {
  Rational c2;
  Rational c3;
  bool singular = false;
  IdempotentReport report;
};

// Phi(0, c2, c3) for each candidate.
std::vector<ScanEntry> nonstandard_scan_n3(
    const std::vector<std::pair<Rational, Rational>>& candidates);

// The representation defined by generator -> op on sites (i, i+1).
RationalMatrix represent(const SymGroupElement& x, const RationalMatrix& generator,
                         std::size_t local_dim);
RationalMatrix represent(const HeckeElement& x, const RationalMatrix& generator,
                         std::size_t local_dim);

struct ConsistencyReport {
  bool pass = false;
  std::string detail;
};

// Algebra path against matrix path for the kernel's representation.
ConsistencyReport representation_consistency(const KernelSpec& k,
                                              const StandardTableau& t);

std::string to_string(const SymGroupElement& x);
std::string to_string(const HeckeElement& x);

}  // namespace ybfuse
