#include "ybfuse/algebra/algebra.hpp"

#include <algorithm>
#include <sstream>

#include "ybfuse/fusion/fusion.hpp"
#include "ybfuse/linalg/elimination.hpp"
#include "ybfuse/linalg/tensor.hpp"

namespace ybfuse {

SymGroupElement operator*(const SymGroupElement& a, const SymGroupElement& b) {
  a.check(b);
  SymGroupElement out(a.n());
  for (const auto& [p, x] : a.terms()) {
    for (const auto& [s, y] : b.terms()) out.add_term(p * s, x * y);
  }
  return out;
}

HeckeElement hecke_left_generator(int i, const HeckeElement& x) {
  const Rational& q = x.rule().q;
  const RationalFunction z(q - q.inverse());
  const Permutation s = Permutation::transposition(x.n(), i, i + 1);
  HeckeElement out(x.n(), x.rule());
  for (const auto& [v, c] : x.terms()) {
    const Permutation sv = s * v;
    out.add_term(sv, c);
    if (sv.length() < v.length()) out.add_term(v, c * z);
  }
  return out;
}

HeckeElement operator*(const HeckeElement& a, const HeckeElement& b) {
  a.check(b);
  HeckeElement out(a.n(), a.rule());
  for (const auto& [w, c] : a.terms()) {
    HeckeElement y = b;
    const auto word = w.reduced_word();
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
      y = hecke_left_generator(*it, y);
    }
    out += c * y;
  }
  return out;
}

HeckeElement hecke_generator(int n, int i, const Rational& q) {
  return HeckeElement::basis(Permutation::transposition(n, i, i + 1),
                             HeckeRule{q});
}

HeckeElement hecke_generator_inverse(int n, int i, const Rational& q) {
  HeckeElement g = hecke_generator(n, i, q);
  g.add_term(Permutation::identity(n), RationalFunction(q.inverse() - q));
  return g;
}

HeckeElement baxterized_hecke(int n, int i, const Rational& q,
                              const RationalFunction& a) {
  HeckeElement g = hecke_generator(n, i, q);
  const RationalFunction z(q - q.inverse());
  g.add_term(Permutation::identity(n), z / (a.inverse() - RationalFunction(1)));
  return g;
}

SymGroupElement baxterized_sym(int n, int i, int j, const RationalFunction& u) {
  SymGroupElement x = SymGroupElement::identity(n);
  x.add_term(Permutation::transposition(n, i, j), -u.inverse());
  return x;
}

namespace {

template <class Element>
Element evaluate_coefficients(const Element& live, const Rational& x,
                              std::size_t step) {
  return live.map_coefficients([&](const RationalFunction& c) {
    try {
      return RationalFunction(c.evaluate(x));
    } catch (const PoleAtEvaluationPoint&) {
      std::ostringstream what;
      what << "coefficient " << c;
      throw GenuineSingularity(step, x, what.str());
    }
  });
}

template <class Element>
void check_idempotent(const Element& e, const StandardTableau& t) {
  if (!(e * e == e)) {
    throw Error("element for " + t.to_string() + " is not idempotent");
  }
  const std::size_t dim = rank(right_regular_matrix(e));
  const std::size_t want = enumerate_syt(t.shape()).size();
  if (dim != want) {
    throw Error("left ideal of " + t.to_string() + " has dimension " +
                std::to_string(dim) + ", expected " + std::to_string(want));
  }
}

template <class Element>
RationalMatrix right_regular(const Element& x) {
  const auto basis = all_permutations(x.n());
  std::map<Permutation, std::size_t> index;
  for (std::size_t k = 0; k < basis.size(); ++k) index[basis[k]] = k;
  RationalMatrix m(basis.size(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const Element y = Element::basis(basis[j], x.rule()) * x;
    for (const auto& [w, c] : y.terms()) m(index[w], j) = c.constant_value();
  }
  return m;
}

template <class Element>
IdempotentReport analyse(const Element& x) {
  IdempotentReport rep;
  for (const auto& [w, c] : x.terms()) {
    if (!c.is_constant()) throw InvalidArgument("coefficients must be constant");
  }
  if (!x.is_zero()) {
    const Element x2 = x * x;
    const auto& [w, c] = *x.terms().begin();
    const RationalFunction s = x2.coefficient(w) / c;
    if (!s.is_zero() && x2 == s * x) {
      rep.idempotent_after_scaling = true;
      rep.scale = s.constant_value();
    }
  }
  rep.left_ideal_dim = rank(right_regular_matrix(x));
  std::size_t full = 1;
  for (int k = 2; k <= x.n(); ++k) full *= static_cast<std::size_t>(k);
  rep.invertible = rep.left_ideal_dim == full;
  return rep;
}

template <class Element>
RationalMatrix represent_impl(const Element& x, const RationalMatrix& gen,
                              std::size_t d) {
  const TensorContext ctx{static_cast<std::size_t>(x.n()), d};
  RationalMatrix total(ctx.dimension(), ctx.dimension());
  for (const auto& [w, c] : x.terms()) {
    RationalMatrix m = RationalMatrix::identity(ctx.dimension());
    for (int i : w.reduced_word()) {
      m = right_apply_pair(m, ctx, gen, static_cast<std::size_t>(i),
                           static_cast<std::size_t>(i) + 1);
    }
    total += m * c.constant_value();
  }
  return total;
}

template <class Element>
std::string format_element(const Element& x, const char* open,
                           const char* close) {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : x.terms()) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c << ")*" << open << w.to_cycle_string() << close;
  }
  return os.str();
}

}  // namespace

SymGroupElement phi_consecutive(const ContentString& c) {
  const int n = static_cast<int>(c.size());
  const RationalFunction t = RationalFunction::variable();
  std::size_t step = 0;
  auto extend = [&](const SymGroupElement& e, std::size_t fixed) {
    step = fixed + 1;
    SymGroupElement live = e;
    for (std::size_t i = 1; i <= fixed; ++i) {
      live = live * baxterized_sym(n, static_cast<int>(i),
                                   static_cast<int>(fixed) + 1,
                                   RationalFunction(c[i - 1]) - t);
    }
    return live;
  };
  auto eval = [&](const SymGroupElement& live, const Rational& x) {
    return evaluate_coefficients(live, x, step);
  };
  return consecutive_evaluation(SymGroupElement::identity(n), c, extend, eval);
}

SymGroupElement phi_direct(const ContentString& c) {
  const int n = static_cast<int>(c.size());
  SymGroupElement x = SymGroupElement::identity(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      x = x * baxterized_sym(n, i, j, RationalFunction(c[i - 1] - c[j - 1]));
    }
  }
  return x;
}

SymGroupElement phi_tilde_direct(const ContentString& c) {
  const int n = static_cast<int>(c.size());
  SymGroupElement x = SymGroupElement::identity(n);
  for (int i = 1; i < n; ++i) {
    for (int s = i; s >= 1; --s) {
      SymGroupElement f =
          SymGroupElement::basis(Permutation::transposition(n, s, s + 1));
      f.add_term(Permutation::identity(n),
                 -RationalFunction(c[i - s] - c[i]).inverse());
      x = x * f;
    }
  }
  return x;
}

SymGroupElement e_tableau(const StandardTableau& t) {
  SymGroupElement e =
      RationalFunction(f_lambda(t.shape())) * phi_consecutive(content_string(t));
  check_idempotent(e, t);
  return e;
}

HeckeElement psi_consecutive(const Rational& q, const ContentString& alphas) {
  check_deformation_parameter(q);
  for (const auto& a : alphas) {
    if (a.is_zero()) throw InvalidArgument("alpha values must be nonzero");
  }
  const int n = static_cast<int>(alphas.size());
  const RationalFunction t = RationalFunction::variable();
  std::size_t step = 0;
  auto extend = [&](const HeckeElement& e, std::size_t fixed) {
    step = fixed + 1;
    HeckeElement live = e;
    for (std::size_t s = fixed; s >= 1; --s) {
      live = live * baxterized_hecke(n, static_cast<int>(s), q,
                                     RationalFunction(alphas[fixed - s]) / t);
    }
    return live;
  };
  auto eval = [&](const HeckeElement& live, const Rational& x) {
    return evaluate_coefficients(live, x, step);
  };
  return consecutive_evaluation(HeckeElement::identity(n, HeckeRule{q}), alphas,
                                extend, eval);
}

HeckeElement t_longest(int n, const Rational& q) {
  HeckeElement x = HeckeElement::identity(n, HeckeRule{q});
  for (int i = 1; i < n; ++i) {
    for (int s = i; s >= 1; --s) x = x * hecke_generator(n, s, q);
  }
  return x;
}

HeckeElement t_longest_inverse(int n, const Rational& q) {
  HeckeElement x = HeckeElement::identity(n, HeckeRule{q});
  for (int i = n - 1; i >= 1; --i) {
    for (int s = 1; s <= i; ++s) x = x * hecke_generator_inverse(n, s, q);
  }
  return x;
}

HeckeElement e_q_tableau(const StandardTableau& t, const Rational& q) {
  const int n = t.size();
  HeckeElement e = RationalFunction(f_q_lambda(t.shape(), q)) *
                   (psi_consecutive(q, content_string(t, q)) *
                    t_longest_inverse(n, q));
  check_idempotent(e, t);
  return e;
}

RationalMatrix right_regular_matrix(const SymGroupElement& x) {
  return right_regular(x);
}

RationalMatrix right_regular_matrix(const HeckeElement& x) {
  return right_regular(x);
}

IdempotentReport idempotent_analysis(const SymGroupElement& x) {
  return analyse(x);
}

IdempotentReport idempotent_analysis(const HeckeElement& x) {
  return analyse(x);
}

std::vector<ScanEntry> nonstandard_scan_n3(
    const std::vector<std::pair<Rational, Rational>>& candidates) {
  std::vector<ScanEntry> out;
  for (const auto& [c2, c3] : candidates) {
    ScanEntry e{c2, c3, false, {}};
    try {
      e.report = idempotent_analysis(phi_consecutive({Rational(0), c2, c3}));
    } catch (const GenuineSingularity&) {
      e.singular = true;
    }
    out.push_back(std::move(e));
  }
  return out;
}

RationalMatrix represent(const SymGroupElement& x, const RationalMatrix& gen,
                         std::size_t local_dim) {
  return represent_impl(x, gen, local_dim);
}

RationalMatrix represent(const HeckeElement& x, const RationalMatrix& gen,
                         std::size_t local_dim) {
  return represent_impl(x, gen, local_dim);
}

ConsistencyReport representation_consistency(const KernelSpec& k,
                                              const StandardTableau& t) {
  const int n = t.size();
  const std::size_t d = k.dim();
  const ContentString c = kernel_contents(k, t);
  const RationalMatrix f_hat =
      consecutive_operator(k, c, EvaluationForm::FHat);
  ConsistencyReport rep;
  rep.pass = true;
  auto expect = [&rep](bool ok, const std::string& what) {
    if (!ok) {
      rep.pass = false;
      rep.detail += (rep.detail.empty() ? "" : "; ") + what;
    }
  };
  if (!k.is_hecke()) {
    const SymGroupElement x =
        RationalFunction(f_lambda(t.shape()).inverse()) * e_tableau(t);
    const SymGroupElement xw =
        x * SymGroupElement::basis(Permutation::longest(n));
    const RationalMatrix gen = r_hat_constant(k);
    if (k.kind() == KernelKind::Yang) {
      expect(represent(x, gen, d) == f_of_tableau(k, t).f,
             "rho(f^-1 E_T) != F(T)");
    }
    expect(represent(xw, gen, d) == f_hat, "rho(f^-1 E_T w_n) != F^(T)");
  } else {
    const Rational& q = k.q();
    const HeckeElement x =
        RationalFunction(f_q_lambda(t.shape(), q).inverse()) *
        (e_q_tableau(t, q) * t_longest(n, q));
    expect(represent(x, r_hat_constant(k), d) == f_hat,
           "rho(f_q^-1 E_T T_w) != F^(T)");
  }
  return rep;
}

std::string to_string(const SymGroupElement& x) {
  return format_element(x, "", "");
}

std::string to_string(const HeckeElement& x) {
  return format_element(x, "T", "");
}

}  // namespace ybfuse
