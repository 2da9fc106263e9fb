#include <gtest/gtest.h>

#include <set>

#include "test_support.hpp"
#include "ybfuse/kernels/identity_check.hpp"
#include "ybfuse/linalg/tensor.hpp"

namespace ybfuse {
namespace {

using testing::fm;
using testing::t;

// e_i (x) e_j, 0-based, is index i*d + j.
std::size_t ix(std::size_t i, std::size_t j, std::size_t d = 2) { return i * d + j; }

TEST(KernelSpec, Validation) {
  EXPECT_THROW(KernelSpec(KernelKind::Yang, 2, 1), InvalidArgument);
  EXPECT_THROW(KernelSpec(KernelKind::SuperYang, 0, 0), InvalidArgument);
  EXPECT_THROW(KernelSpec::hecke(2, Rational(1)), InvalidDeformationParameter);
  EXPECT_THROW(KernelSpec::hecke(2, Rational(0)), InvalidDeformationParameter);
  EXPECT_THROW(KernelSpec(KernelKind::Hecke, 2), InvalidDeformationParameter);
  EXPECT_EQ(KernelSpec::super_yang(2, 1).grading(), (std::vector<int>{0, 0, 1}));
  EXPECT_EQ(parse_kernel_kind("super-hecke"), KernelKind::SuperHecke);
  EXPECT_THROW(parse_kernel_kind("xxz"), InvalidArgument);
}

TEST(RMatrix, YangIsIdMinusPOverU) {
  for (int N : {1, 2, 3}) {
    const auto d = static_cast<std::size_t>(N);
    const FunctionMatrix r = r_matrix(KernelSpec::yang(N));
    const FunctionMatrix want =
        fm(RationalMatrix::identity(d * d)) - fm(swap_operator(d)) * t().inverse();
    EXPECT_EQ(r, want);
    EXPECT_EQ(r * t() - fm(RationalMatrix::identity(d * d)) * t(), -fm(swap_operator(d)));
  }
}

TEST(RMatrix, HeckeTwoByTwo) {
  for (const Rational& q : {Rational(2), Rational(3, 2)}) {
    const RationalFunction a = t();
    const RationalFunction z = RationalFunction(q - q.inverse());
    const RationalFunction den = a.inverse() - 1;
    const FunctionMatrix r = r_matrix(KernelSpec::hecke(2, q));
    const RationalFunction diag = (RationalFunction(q) * a.inverse() - q.inverse()) / den;
    EXPECT_EQ(r(0, 0), diag);
    EXPECT_EQ(r(3, 3), diag);
    // Middle block on e1(x)e2, e2(x)e1.
    const RationalFunction e1 = RationalFunction(1);
    const RationalFunction e2 = z / den;
    const RationalFunction e3 = z * a.inverse() / den;
    std::multiset<std::string> got, want;
    for (std::size_t i : {1, 2}) {
      for (std::size_t j : {1, 2}) got.insert(r(i, j).to_string());
    }
    for (const auto& e : {e1, e1, e2, e3}) want.insert(e.to_string());
    EXPECT_EQ(got, want);
    for (std::size_t i : {1, 2}) {
      EXPECT_TRUE(r(0, i).is_zero());
      EXPECT_TRUE(r(i, 3).is_zero());
    }
  }
}

TEST(RMatrix, SuperHeckeDiffersOnlyAtOddDiagonal) {
  const Rational q(2);
  const FunctionMatrix h = r_matrix(KernelSpec::hecke(2, q));
  const FunctionMatrix s = r_matrix(KernelSpec::super_hecke(1, 1, q));
  const RationalFunction a = t();
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      if (i == 3 && j == 3) continue;
      EXPECT_EQ(h(i, j), s(i, j));
    }
  }
  EXPECT_EQ(s(3, 3), (RationalFunction(q) - RationalFunction(q.inverse()) * a.inverse()) /
                         (a.inverse() - 1));
}

TEST(RMatrix, SuperWithoutOddPartIsEven) {
  const Rational q(3, 2);
  for (int N : {1, 2, 3}) {
    EXPECT_EQ(r_matrix(KernelSpec::super_yang(N, 0)), r_matrix(KernelSpec::yang(N)));
    EXPECT_EQ(r_matrix(KernelSpec::super_hecke(N, 0, q)), r_matrix(KernelSpec::hecke(N, q)));
  }
}

TEST(RHatMatrix, Forms) {
  const FunctionMatrix yang = r_hat_matrix(KernelSpec::yang(2));
  EXPECT_EQ(yang, fm(swap_operator(2)) - fm(RationalMatrix::identity(4)) * t().inverse());
  const Rational q(2);
  const KernelSpec h = KernelSpec::hecke(2, q);
  const FunctionMatrix rh = r_hat_matrix(h);
  const RationalFunction shift = RationalFunction(q - q.inverse()) / (t().inverse() - 1);
  EXPECT_EQ(rh, fm(r_hat_constant(h)) + fm(RationalMatrix::identity(4)) * shift);
  // R^ = P~ - Id/u for super Yang.
  const KernelSpec sy = KernelSpec::super_yang(1, 1);
  const FunctionMatrix sr = r_hat_matrix(sy);
  EXPECT_EQ(sr + fm(RationalMatrix::identity(4)) * t().inverse(), fm(signed_swap(sy.grading())));
}

TEST(RHatConstant, SignedSwapEntries) {
  const auto g = std::vector<int>{0, 1};
  const RationalMatrix s = signed_swap(g);
  EXPECT_EQ(s(ix(1, 1), ix(1, 1)), Rational(-1));
  EXPECT_EQ(s(ix(0, 1), ix(1, 0)), Rational(1));
  EXPECT_EQ(s(ix(0, 0), ix(0, 0)), Rational(1));
}

TEST(Gamma, Values) {
  const RationalFunction additive = (t() * t() - 1) / (t() * t());
  EXPECT_EQ(gamma(KernelSpec::yang(2)), additive);
  EXPECT_EQ(gamma(KernelSpec::yang(3)), additive);
  EXPECT_EQ(gamma(KernelSpec::super_yang(1, 1)), additive);
  EXPECT_EQ(gamma(KernelSpec::super_yang(2, 1)), additive);
  for (const Rational& q : {Rational(2), Rational(3, 2)}) {
    const RationalFunction a = t();
    const RationalFunction want =
        (a - q * q) * (a - (q * q).inverse()) / ((a - 1) * (a - 1));
    EXPECT_EQ(gamma(KernelSpec::hecke(2, q)), want);
    EXPECT_EQ(gamma(KernelSpec::super_hecke(1, 1, q)), want);
    EXPECT_EQ(gamma(KernelSpec::super_hecke(2, 1, q)), want);
  }
}

TEST(Gamma, ScalarOnGridPoints) {
  const KernelSpec kernels[] = {KernelSpec::yang(2), KernelSpec::super_yang(2, 1),
                                KernelSpec::hecke(2, Rational(2)),
                                KernelSpec::super_hecke(1, 1, Rational(2))};
  for (const auto& k : kernels) {
    const TensorContext ctx{2, k.dim()};
    const FunctionMatrix r = r_matrix(k);
    const RationalFunction g = gamma(k);
    for (int p = 2; p <= 7; ++p) {
      const Rational x(p, 3);
      if (denominator_lcm(r)(x).is_zero() || g.has_pole_at(x)) continue;
      const Rational xd = k.is_hecke() ? x.inverse() : -x;
      if (denominator_lcm(r)(xd).is_zero()) continue;
      const RationalMatrix lhs =
          evaluate(r, x) * embed_pair(ctx, evaluate(r, xd), 2, 1);
      EXPECT_EQ(lhs, RationalMatrix::identity(k.dim() * k.dim()) * g(x));
    }
  }
}

TEST(BaseYbe, AllKernelsPass) {
  const Rational q(2);
  const KernelSpec kernels[] = {
      KernelSpec::yang(2),           KernelSpec::super_yang(1, 1),
      KernelSpec::hecke(2, q),       KernelSpec::super_hecke(1, 1, q),
      KernelSpec::super_yang(2, 1),  KernelSpec::super_hecke(2, 1, Rational(3, 2))};
  for (const auto& k : kernels) {
    const IdentityReport r = base_ybe_check(k);
    EXPECT_TRUE(r.pass) << k.describe();
    EXPECT_EQ(r.points, 81u);
    EXPECT_EQ(r.degree_bound, 8u);
  }
}

TEST(BaseYbe, MutatedKernelFails) {
  const IdentityReport r = ybe_check(mutated_yang_kernel(2), Convention::Additive, 2);
  EXPECT_FALSE(r.pass);
  ASSERT_TRUE(r.counterexample.has_value());
}

TEST(BaseYbe, HeckeRelations) {
  for (const Rational& q : {Rational(2), Rational(3, 2)}) {
    for (const auto& k : {KernelSpec::hecke(2, q), KernelSpec::hecke(3, q),
                          KernelSpec::super_hecke(1, 1, q),
                          KernelSpec::super_hecke(2, 1, q)}) {
      const RationalMatrix rh = r_hat_constant(k);
      EXPECT_TRUE(check_quadratic(rh, q)) << k.describe();
      EXPECT_TRUE(check_braid(rh, k.dim())) << k.describe();
    }
  }
  EXPECT_FALSE(check_quadratic(r_hat_constant(KernelSpec::hecke(2, Rational(2))), Rational(3)));
}

TEST(BraidedSuperYbe, Passes) {
  EXPECT_TRUE(braided_super_ybe_check({0, 1}).pass);
  EXPECT_TRUE(braided_super_ybe_check({0, 0, 1}).pass);
}

TEST(ProductIdentity, DetectsWrongOrder) {
  // R12(u) R23(v) differs from R23(v) R12(u).
  const FactorProduct lhs = {{1, 2, {1, 0, Rational(0)}}, {2, 3, {0, 1, Rational(0)}}};
  const FactorProduct rhs = {{2, 3, {0, 1, Rational(0)}}, {1, 2, {1, 0, Rational(0)}}};
  const IdentityReport r = check_product_identity(
      r_matrix(KernelSpec::yang(2)), Convention::Additive, TensorContext{3, 2}, lhs, rhs, 4);
  EXPECT_FALSE(r.pass);
}

}  // namespace
}  // namespace ybfuse
