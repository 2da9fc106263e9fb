#include "ybfuse/fusion/fusion.hpp"

#include <algorithm>
#include <map>

#include "ybfuse/linalg/tensor.hpp"

namespace ybfuse {

namespace {

void check_contents(const KernelSpec& k, const ContentString& c) {
  if (c.empty()) throw InvalidContents("empty content string");
  if (!k.is_hecke()) return;
  for (const auto& x : c) {
    if (x.is_zero()) throw InvalidContents("multiplicative contents must be nonzero");
  }
}

// R evaluated at x; poles become SingularContents.
RationalMatrix kernel_value(const FunctionMatrix& r, const Rational& x) {
  try {
    return evaluate(r, x);
  } catch (const PoleAtEvaluationPoint& e) {
    throw SingularContents("factor singular at " + x.to_display() +
                           "; use consecutive evaluation");
  }
}

RationalMatrix pair_on(const TensorContext& ctx, const RationalMatrix& op,
                       std::size_t i, std::size_t j) {
  return embed_pair(ctx, op, i, j);
}

ContentString swapped(const ContentString& c, int kpos) {
  ContentString out = c;
  std::swap(out[kpos - 1], out[kpos]);
  return out;
}

// P_{k,k+1} R_{k+1,k}(x) on n sites.
RationalMatrix swap_times_reversed(const KernelSpec& k, std::size_t n,
                                   int kpos, const Rational& x) {
  const TensorContext ctx{n, k.dim()};
  const std::size_t a = static_cast<std::size_t>(kpos);
  RationalMatrix m = pair_on(ctx, kernel_value(r_matrix(k), x), a + 1, a);
  return left_apply_pair(m, ctx, swap_operator(k.dim()), a, a + 1);
}

// P_{k,k+1} R_{k,k+1}(x) on n sites.
RationalMatrix swap_times_forward(const KernelSpec& k, std::size_t n, int kpos,
                                  const Rational& x) {
  const TensorContext ctx{n, k.dim()};
  const std::size_t a = static_cast<std::size_t>(kpos);
  RationalMatrix m = pair_on(ctx, kernel_value(r_matrix(k), x), a, a + 1);
  return left_apply_pair(m, ctx, swap_operator(k.dim()), a, a + 1);
}

void check_kpos(const ContentString& c, int kpos) {
  if (kpos < 1 || static_cast<std::size_t>(kpos) >= c.size()) {
    throw InvalidArgument("transposition index out of range");
  }
}

std::string first_difference(const FunctionMatrix& a, const FunctionMatrix& b,
                             const std::string& var) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return "shape differs";
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) != b(i, j)) {
        return "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
               "): " + a(i, j).to_string(var) + " vs " + b(i, j).to_string(var);
      }
    }
  }
  return "";
}

}  // namespace

FactorProduct fused_factor_list(const KernelSpec& k, const ContentString& c,
                                const ContentString& cbar, std::size_t first,
                                std::size_t second, FusedOrder order,
                                int u_flag, int v_flag) {
  check_contents(k, c);
  check_contents(k, cbar);
  const std::size_t n = c.size(), n1 = cbar.size();
  FactorProduct out;
  auto push = [&](std::size_t j, std::size_t i) {
    out.push_back(PairFactor{first + j, second + i,
                             {u_flag, v_flag, k.difference(c[j - 1], cbar[i - 1])}});
  };
  if (order == FusedOrder::Defining) {
    for (std::size_t i = 1; i <= n1; ++i) {
      for (std::size_t j = n; j >= 1; --j) push(j, i);
    }
  } else {
    for (std::size_t j = n; j >= 1; --j) {
      for (std::size_t i = 1; i <= n1; ++i) push(j, i);
    }
  }
  return out;
}

FunctionMatrix fused_product(const KernelSpec& k, const ContentString& c,
                             const ContentString& cbar, FusedOrder order) {
  const TensorContext ctx{c.size() + cbar.size(), k.dim()};
  const FunctionMatrix r = r_matrix(k);
  const RationalFunction t = RationalFunction::variable();
  std::map<Rational, FunctionMatrix> ops;
  FunctionMatrix m = FunctionMatrix::identity(ctx.dimension());
  for (const auto& f : fused_factor_list(k, c, cbar, 0, c.size(), order, 1, 0)) {
    auto it = ops.find(f.arg.shift);
    if (it == ops.end()) {
      it = ops.emplace(f.arg.shift, compose(r, k.combine(t, f.arg.shift))).first;
    }
    m = right_apply_pair(m, ctx, it->second, f.i, f.j);
  }
  return m;
}

FusedOperator fused_operator(const KernelSpec& k, const ContentString& c,
                             const ContentString& cbar) {
  FunctionMatrix a = fused_product(k, c, cbar, FusedOrder::Defining);
  FunctionMatrix b = fused_product(k, c, cbar, FusedOrder::Alternative);
  if (a != b) {
    throw Error("fused operator orders disagree: " +
                first_difference(a, b, k.variable_name()));
  }
  return FusedOperator{k, c, cbar, std::move(a)};
}

RationalMatrix f_operator_ordered(const KernelSpec& k, const ContentString& c,
                                  ProductOrder order) {
  check_contents(k, c);
  const std::size_t n = c.size();
  const TensorContext ctx{n, k.dim()};
  const FunctionMatrix r = r_matrix(k);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) pairs.emplace_back(i, j);
  }
  if (order == ProductOrder::ReverseLex) std::reverse(pairs.begin(), pairs.end());
  RationalMatrix m = RationalMatrix::identity(ctx.dimension());
  for (auto [i, j] : pairs) {
    m = right_apply_pair(m, ctx, kernel_value(r, k.difference(c[i - 1], c[j - 1])),
                         i, j);
  }
  return m;
}

RationalMatrix f_operator(const KernelSpec& k, const ContentString& c) {
  RationalMatrix lex = f_operator_ordered(k, c, ProductOrder::Lex);
  if (lex != f_operator_ordered(k, c, ProductOrder::ReverseLex)) {
    throw Error("lex and reverse-lex products of F(c) differ");
  }
  return lex;
}

RationalMatrix longest_element_operator(const TensorContext& ctx) {
  return perm_operator(ctx, Permutation::longest(static_cast<int>(ctx.sites)));
}

RationalMatrix f_hat_product(const KernelSpec& k, const ContentString& c) {
  check_contents(k, c);
  const std::size_t n = c.size();
  const TensorContext ctx{n, k.dim()};
  const FunctionMatrix rh = r_hat_matrix(k);
  RationalMatrix m = RationalMatrix::identity(ctx.dimension());
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t s = i; s >= 1; --s) {
      const Rational x = k.difference(c[i - s], c[i]);
      m = right_apply_pair(m, ctx, kernel_value(rh, x), s, s + 1);
    }
  }
  return m;
}

RationalMatrix f_hat_operator(const KernelSpec& k, const ContentString& c) {
  RationalMatrix fh = f_hat_product(k, c);
  const TensorContext ctx{c.size(), k.dim()};
  if (fh != f_operator(k, c) * longest_element_operator(ctx)) {
    throw Error("F^(c) differs from F(c) P_{w_n}");
  }
  return fh;
}

RationalMatrix consecutive_operator(const KernelSpec& k, const ContentString& c,
                                    EvaluationForm form) {
  check_contents(k, c);
  const std::size_t d = k.dim();
  const FunctionMatrix r =
      form == EvaluationForm::F ? r_matrix(k) : r_hat_matrix(k);
  const RationalFunction t = RationalFunction::variable();
  auto extend = [&](const RationalMatrix& e, std::size_t fixed) {
    const TensorContext ctx{fixed + 1, d};
    FunctionMatrix live =
        to_function_matrix(kron(e, RationalMatrix::identity(d)));
    if (form == EvaluationForm::F) {
      // R_{1,k+1}(c_1 ./. t) ... R_{k,k+1}(c_k ./. t)
      for (std::size_t i = 1; i <= fixed; ++i) {
        live = right_apply_pair(live, ctx, compose(r, k.difference(c[i - 1], t)),
                                i, fixed + 1);
      }
    } else {
      // R^_{k,k+1}(c_1 ./. t) ... R^_{1,2}(c_k ./. t)
      for (std::size_t s = fixed; s >= 1; --s) {
        live = right_apply_pair(
            live, ctx, compose(r, k.difference(c[fixed - s], t)), s, s + 1);
      }
    }
    return live;
  };
  auto eval = [](const FunctionMatrix& live, const Rational& x) {
    return evaluate(live, x);
  };
  return consecutive_evaluation(RationalMatrix::identity(d), c, extend, eval);
}

ContentString kernel_contents(const KernelSpec& k, const StandardTableau& t) {
  return k.is_hecke() ? content_string(t, k.q()) : content_string(t);
}

std::uint64_t expected_rank(const KernelSpec& k, const Partition& shape) {
  return k.is_super() ? count_hook_ssyt(shape, k.N(), k.M())
                      : count_ssyt(shape, k.N());
}

InvariantSubspace f_of_tableau(const KernelSpec& k, const StandardTableau& t) {
  InvariantSubspace w;
  w.tableau = t;
  w.contents = kernel_contents(k, t);
  if (k.is_hecke()) {
    const TensorContext ctx{w.contents.size(), k.dim()};
    w.f = consecutive_operator(k, w.contents, EvaluationForm::FHat) *
          longest_element_operator(ctx);
  } else {
    w.f = consecutive_operator(k, w.contents, EvaluationForm::F);
  }
  w.space = column_space_basis(w.f);
  const std::uint64_t want = expected_rank(k, t.shape());
  if (w.space.rank != want) {
    throw SchurWeylMismatch("rank of F(" + t.to_string() + ") is " +
                            std::to_string(w.space.rank) + ", expected " +
                            std::to_string(want));
  }
  return w;
}

InvariantSubspace subspace_of_contents(const KernelSpec& k,
                                       const ContentString& c) {
  InvariantSubspace w;
  w.contents = c;
  w.f = f_operator(k, c);
  w.space = column_space_basis(w.f);
  return w;
}

RationalMatrix leading_normalized(RationalMatrix b) {
  for (std::size_t j = 0; j < b.cols(); ++j) {
    std::size_t r = 0;
    while (r < b.rows() && b(r, j).is_zero()) ++r;
    if (r == b.rows()) continue;
    const Rational s = b(r, j).inverse();
    for (; r < b.rows(); ++r) b(r, j) = b(r, j) * s;
  }
  return b;
}

FunctionMatrix restrict_fused(const KernelSpec& k, const StandardTableau& t,
                              const StandardTableau& t2,
                              const std::optional<BasisPair>& bases) {
  const ContentString c = kernel_contents(k, t);
  const ContentString cbar = kernel_contents(k, t2);
  RationalMatrix b;
  if (bases) {
    b = kron(bases->first, bases->second);
  } else {
    b = kron(leading_normalized(f_of_tableau(k, t).space.basis),
             leading_normalized(f_of_tableau(k, t2).space.basis));
  }
  return restrict_to_subspace(fused_operator(k, c, cbar).matrix, b);
}

bool is_admissible(const KernelSpec& k, const ContentString& c, int kpos) {
  check_kpos(c, kpos);
  const Rational x = k.difference(c[kpos - 1], c[kpos]);
  const Rational y = k.difference(c[kpos], c[kpos - 1]);
  const RationalFunction g = gamma(k);
  const Polynomial poles = denominator_lcm(r_matrix(k));
  if (poles(x).is_zero() || poles(y).is_zero() || g.has_pole_at(x)) {
    return false;
  }
  return !g.evaluate(x).is_zero();
}

RationalMatrix conjugation_Ak(const KernelSpec& k, const ContentString& c,
                              int kpos) {
  check_contents(k, c);
  if (!is_admissible(k, c, kpos)) {
    throw NotAdmissible("s_" + std::to_string(kpos) + " is not admissible");
  }
  return swap_times_reversed(k, c.size(), kpos,
                             k.difference(c[kpos], c[kpos - 1]));
}

RationalMatrix conjugation_Ak_inverse(const KernelSpec& k,
                                      const ContentString& c, int kpos) {
  check_contents(k, c);
  if (!is_admissible(k, c, kpos)) {
    throw NotAdmissible("s_" + std::to_string(kpos) + " is not admissible");
  }
  const Rational x = k.difference(c[kpos - 1], c[kpos]);
  const TensorContext ctx{c.size(), k.dim()};
  const std::size_t a = static_cast<std::size_t>(kpos);
  RationalMatrix m = pair_on(ctx, kernel_value(r_matrix(k), x), a, a + 1);
  m = right_apply_pair(m, ctx, swap_operator(k.dim()), a, a + 1);
  return m * gamma(k).evaluate(x).inverse();
}

EquivalenceReport verify_transposition_equivalence(const KernelSpec& k,
                                                   const StandardTableau& t,
                                                   const StandardTableau& t2,
                                                   int kpos) {
  auto ts = admissible_transposition(t, kpos);
  if (!ts) {
    throw NotAdmissible("s_" + std::to_string(kpos) + " does not keep " +
                        t.to_string() + " standard");
  }
  const ContentString c = kernel_contents(k, t);
  const ContentString cs = kernel_contents(k, *ts);
  const ContentString cbar = kernel_contents(k, t2);
  const RationalMatrix a = conjugation_Ak(k, c, kpos);
  const RationalMatrix bt = f_of_tableau(k, t).space.basis;
  const RationalMatrix bt2 = f_of_tableau(k, t2).space.basis;
  const RationalMatrix abt = a * bt;

  EquivalenceReport rep;
  rep.original =
      restrict_to_subspace(fused_operator(k, c, cbar).matrix, kron(bt, bt2));
  rep.transposed =
      restrict_to_subspace(fused_operator(k, cs, cbar).matrix, kron(abt, bt2));

  const RationalMatrix ws = f_of_tableau(k, *ts).space.basis;
  RationalMatrix joined(ws.rows(), ws.cols() + abt.cols());
  for (std::size_t r = 0; r < ws.rows(); ++r) {
    for (std::size_t j = 0; j < ws.cols(); ++j) joined(r, j) = ws(r, j);
    for (std::size_t j = 0; j < abt.cols(); ++j) joined(r, ws.cols() + j) = abt(r, j);
  }
  const std::size_t rj = rank(joined);
  rep.spans_match = rj == ws.cols() && rj == abt.cols();
  rep.detail = first_difference(rep.original, rep.transposed, k.variable_name());
  rep.pass = rep.detail.empty() && rep.spans_match;
  if (!rep.spans_match) rep.detail += " span(A_k B) differs from W";
  return rep;
}

std::size_t fused_degree_bound(std::size_t n, std::size_t n1, std::size_t n2) {
  return 2 * (n * n1 + n * n2 + n1 * n2);
}

IdentityReport verify_fused_ybe(const KernelSpec& k, const ContentString& c,
                                const ContentString& cbar,
                                const ContentString& cbarbar,
                                std::optional<std::size_t> degree_bound) {
  const std::size_t n = c.size(), n1 = cbar.size(), n2 = cbarbar.size();
  const FusedOrder def = FusedOrder::Defining;
  auto ab = fused_factor_list(k, c, cbar, 0, n, def, 1, 0);
  auto ac = fused_factor_list(k, c, cbarbar, 0, n + n1, def, 1, 1);
  auto bc = fused_factor_list(k, cbar, cbarbar, n, n + n1, def, 0, 1);
  FactorProduct lhs = ab;
  lhs.insert(lhs.end(), ac.begin(), ac.end());
  lhs.insert(lhs.end(), bc.begin(), bc.end());
  FactorProduct rhs = bc;
  rhs.insert(rhs.end(), ac.begin(), ac.end());
  rhs.insert(rhs.end(), ab.begin(), ab.end());
  return check_product_identity(
      r_matrix(k), k.convention(), TensorContext{n + n1 + n2, k.dim()}, lhs,
      rhs, degree_bound.value_or(fused_degree_bound(n, n1, n2)));
}

InvarianceReport verify_invariance(const KernelSpec& k,
                                   const InvariantSubspace& w,
                                   const InvariantSubspace& wbar) {
  const FunctionMatrix m = fused_operator(k, w.contents, wbar.contents).matrix;
  const std::size_t dn = w.f.rows(), dn1 = wbar.f.rows();
  auto preserved = [&m](const RationalMatrix& b) {
    try {
      restrict_to_subspace(m, b);
      return true;
    } catch (const SubspaceNotInvariant&) {
      return false;
    }
  };
  InvarianceReport rep;
  rep.left = preserved(kron(w.space.basis, RationalMatrix::identity(dn1)));
  rep.right = preserved(kron(RationalMatrix::identity(dn), wbar.space.basis));
  rep.combined = preserved(kron(w.space.basis, wbar.space.basis));
  return rep;
}

bool verify_dep_R(const KernelSpec& k, const ContentString& c,
                  const ContentString& cbar, int kpos) {
  check_kpos(c, kpos);
  const RationalMatrix a = swap_times_reversed(
      k, c.size(), kpos, k.difference(c[kpos], c[kpos - 1]));
  std::size_t rest = 1;
  for (std::size_t s = 0; s < cbar.size(); ++s) rest *= k.dim();
  const RationalMatrix lifted = kron(a, RationalMatrix::identity(rest));
  const FunctionMatrix lhs =
      multiply(lifted, fused_product(k, c, cbar, FusedOrder::Defining));
  const FunctionMatrix rhs = multiply(
      fused_product(k, swapped(c, kpos), cbar, FusedOrder::Defining), lifted);
  return lhs == rhs;
}

bool verify_dep_F(const KernelSpec& k, const ContentString& c, int kpos) {
  check_kpos(c, kpos);
  const RationalMatrix a = swap_times_reversed(
      k, c.size(), kpos, k.difference(c[kpos], c[kpos - 1]));
  const RationalMatrix b = swap_times_forward(
      k, c.size(), kpos, k.difference(c[kpos - 1], c[kpos]));
  return a * f_operator_ordered(k, c, ProductOrder::Lex) ==
         f_operator_ordered(k, swapped(c, kpos), ProductOrder::Lex) * b;
}

}  // namespace ybfuse
