#include "ybfuse/kernels/identity_check.hpp"

#include <map>

namespace ybfuse {

namespace {

using IntMatrix = Matrix<mpz_class>;

Rational argument_value(Convention c, const SpectralArgument& a,
                        const Rational& u, const Rational& v) {
  if (c == Convention::Additive) {
    Rational x = a.shift;
    if (a.u) x += u;
    if (a.v) x += v;
    return x;
  }
  Rational x = a.shift;
  if (a.u) x *= u;
  if (a.v) x *= v;
  return x;
}

struct ScaledOperator {
  IntMatrix op;
  mpz_class scale;
};

// op * scale is integral.
ScaledOperator clear_denominators(const RationalMatrix& m) {
  ScaledOperator s;
  s.scale = denominator_lcm(m.entries());
  s.op = m.map([&s](const Rational& r) {
    return mpz_class(r.numerator() * (s.scale / r.denominator()));
  });
  return s;
}

class ProductEvaluator {
 public:
  ProductEvaluator(const FunctionMatrix& kernel, Convention c,
                   const TensorContext& ctx)
      : kernel_(kernel), convention_(c), ctx_(ctx) {}

  // Integer matrix and scalar whose quotient is the product.
  std::pair<IntMatrix, mpz_class> evaluate(const FactorProduct& factors,
                                           const Rational& u,
                                           const Rational& v) {
    IntMatrix m = IntMatrix::identity(ctx_.dimension());
    mpz_class scale = 1;
    for (const auto& f : factors) {
      const ScaledOperator& s = lookup(argument_value(convention_, f.arg, u, v));
      m = right_apply_pair(m, ctx_, s.op, f.i, f.j);
      scale *= s.scale;
    }
    return {std::move(m), std::move(scale)};
  }

 private:
  const ScaledOperator& lookup(const Rational& x) {
    auto it = cache_.find(x);
    if (it != cache_.end()) return it->second;
    return cache_.emplace(x, clear_denominators(ybfuse::evaluate(kernel_, x)))
        .first->second;
  }

  const FunctionMatrix& kernel_;
  Convention convention_;
  TensorContext ctx_;
  std::map<Rational, ScaledOperator> cache_;
};

bool same_ratio(const std::pair<IntMatrix, mpz_class>& a,
                const std::pair<IntMatrix, mpz_class>& b) {
  const auto& x = a.first.entries();
  const auto& y = b.first.entries();
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (x[k] * b.second != y[k] * a.second) return false;
  }
  return true;
}

}  // namespace

IdentityReport check_product_identity(const FunctionMatrix& kernel,
                                      Convention convention,
                                      const TensorContext& ctx,
                                      const FactorProduct& lhs,
                                      const FactorProduct& rhs,
                                      std::size_t degree_bound) {
  const Polynomial poles = denominator_lcm(kernel);
  auto singular = [&](const PairFactor& f, const Rational& u,
                      const Rational& v) {
    return poles(argument_value(convention, f.arg, u, v)).is_zero();
  };
  FactorProduct all = lhs;
  all.insert(all.end(), rhs.begin(), rhs.end());
  for (const auto& f : all) {
    if (!f.arg.u && !f.arg.v && singular(f, Rational(0), Rational(0))) {
      throw InvalidArgument("constant factor sits on a pole");
    }
  }

  const std::size_t count = degree_bound + 1;
  std::vector<Rational> us, vs;
  for (long x = 1; us.size() < count; ++x) {
    bool ok = true;
    for (const auto& f : all) {
      if (f.arg.u && !f.arg.v && singular(f, Rational(x), Rational(0))) ok = false;
    }
    if (ok) us.emplace_back(x);
  }
  for (long y = 1; vs.size() < count; ++y) {
    bool ok = true;
    for (const auto& f : all) {
      if (!f.arg.v) continue;
      if (!f.arg.u) {
        ok = ok && !singular(f, Rational(0), Rational(y));
        continue;
      }
      for (const auto& x : us) ok = ok && !singular(f, x, Rational(y));
    }
    if (ok) vs.emplace_back(y);
  }

  IdentityReport report;
  report.degree_bound = degree_bound;
  ProductEvaluator eval(kernel, convention, ctx);
  for (const auto& u : us) {
    for (const auto& v : vs) {
      auto left = eval.evaluate(lhs, u, v);
      auto right = eval.evaluate(rhs, u, v);
      ++report.points;
      if (!same_ratio(left, right)) {
        report.counterexample = GridPoint{u, v};
        return report;
      }
    }
  }
  report.pass = true;
  return report;
}

IdentityReport ybe_check(const FunctionMatrix& kernel, Convention convention,
                         std::size_t local_dim, std::size_t degree_bound) {
  const Rational unit =
      convention == Convention::Additive ? Rational(0) : Rational(1);
  const PairFactor r12{1, 2, {1, 0, unit}};
  const PairFactor r13{1, 3, {1, 1, unit}};
  const PairFactor r23{2, 3, {0, 1, unit}};
  return check_product_identity(kernel, convention, TensorContext{3, local_dim},
                                {r12, r13, r23}, {r23, r13, r12}, degree_bound);
}

IdentityReport base_ybe_check(const KernelSpec& k, std::size_t degree_bound) {
  return ybe_check(r_matrix(k), k.convention(), k.dim(), degree_bound);
}

bool check_quadratic(const RationalMatrix& r_hat, const Rational& q) {
  const RationalMatrix id = RationalMatrix::identity(r_hat.rows());
  return (r_hat * r_hat - r_hat * (q - q.inverse()) - id).is_zero();
}

bool check_braid(const RationalMatrix& r_hat, std::size_t local_dim) {
  const TensorContext ctx{3, local_dim};
  const RationalMatrix a = embed_pair(ctx, r_hat, 1, 2);
  const RationalMatrix b = embed_pair(ctx, r_hat, 2, 3);
  return a * b * a == b * a * b;
}

IdentityReport braided_super_ybe_check(const std::vector<int>& grading,
                                       std::size_t degree_bound) {
  const std::size_t d = grading.size();
  const TensorContext ctx{3, d};
  const RationalMatrix pt = signed_swap(grading);
  const RationalMatrix p12 = embed_pair(ctx, pt, 1, 2);
  const RationalMatrix p23 = embed_pair(ctx, pt, 2, 3);
  auto r12 = [&](const Rational& x) {
    RationalMatrix r = RationalMatrix::identity(d * d) - pt * x.inverse();
    return embed_pair(ctx, r, 1, 2);
  };
  IdentityReport report;
  report.degree_bound = degree_bound;
  for (long a = 1; a <= static_cast<long>(degree_bound) + 1; ++a) {
    for (long b = 1; b <= static_cast<long>(degree_bound) + 1; ++b) {
      const Rational u(a), v(b);
      const RationalMatrix x = r12(u);
      const RationalMatrix y = p23 * r12(u + v) * p23;
      const RationalMatrix z = p12 * p23 * r12(v) * p23 * p12;
      ++report.points;
      if (x * y * z != z * y * x) {
        report.counterexample = GridPoint{u, v};
        return report;
      }
    }
  }
  report.pass = true;
  return report;
}

FunctionMatrix mutated_yang_kernel(std::size_t d) {
  RationalMatrix q = swap_operator(d);
  q(0, 1) += Rational(1);
  const RationalFunction t = RationalFunction::variable();
  return FunctionMatrix::identity(d * d) - to_function_matrix(q) * t.inverse();
}

}  // namespace ybfuse
