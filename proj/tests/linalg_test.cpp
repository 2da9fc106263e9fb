#include <gtest/gtest.h>

#include "test_support.hpp"
#include "ybfuse/linalg/elimination.hpp"
#include "ybfuse/linalg/tensor.hpp"

namespace ybfuse {
namespace {

using testing::fm;
using testing::t;

RationalMatrix basis_vector(std::size_t dim, std::size_t k) {
  RationalMatrix v(dim, 1);
  v(k, 0) = Rational(1);
  return v;
}

// Index of x_1 (x) ... (x) x_n with site 1 most significant.
std::size_t index_of(const std::vector<std::size_t>& digits, std::size_t d) {
  std::size_t idx = 0;
  for (auto x : digits) idx = idx * d + x;
  return idx;
}

std::vector<std::size_t> digits_of(std::size_t idx, std::size_t n, std::size_t d) {
  std::vector<std::size_t> out(n);
  for (std::size_t s = n; s-- > 0;) {
    out[s] = idx % d;
    idx /= d;
  }
  return out;
}

// P_pi e_{x_1..x_n} = e_{x_pi(1)..x_pi(n)} from the definition.
RationalMatrix perm_oracle(std::size_t n, std::size_t d, const Permutation& pi) {
  std::size_t dim = 1;
  for (std::size_t s = 0; s < n; ++s) dim *= d;
  RationalMatrix m(dim, dim);
  for (std::size_t col = 0; col < dim; ++col) {
    const auto x = digits_of(col, n, d);
    std::vector<std::size_t> y(n);
    for (std::size_t k = 1; k <= n; ++k) y[k - 1] = x[pi(static_cast<int>(k)) - 1];
    m(index_of(y, d), col) = Rational(1);
  }
  return m;
}

TEST(Kron, IdentityTimesIdentity) {
  EXPECT_EQ(kron(RationalMatrix::identity(2), RationalMatrix::identity(3)),
            RationalMatrix::identity(6));
}

TEST(Kron, Associative) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 5; ++trial) {
    const auto a = testing::random_matrix(rng, 2, 2);
    const auto b = testing::random_matrix(rng, 2, 2);
    const auto c = testing::random_matrix(rng, 2, 2);
    EXPECT_EQ(kron(a, kron(b, c)), kron(kron(a, b), c));
  }
}

TEST(Kron, SwapTimesSwapOnBasisVector) {
  const RationalMatrix s = swap_operator(2);
  const RationalMatrix ss = kron(s, s);
  // (0,1,1,0) -> (1,0,0,1) by swapping each pair of digits.
  const std::size_t from = index_of({0, 1, 1, 0}, 2);
  const std::size_t to = index_of({1, 0, 0, 1}, 2);
  EXPECT_EQ(ss * basis_vector(16, from), basis_vector(16, to));
}

TEST(PermOperator, Examples) {
  const TensorContext c2{2, 2};
  EXPECT_EQ(perm_operator(c2, Permutation::identity(2)), RationalMatrix::identity(4));
  const RationalMatrix p = perm_operator(c2, Permutation::transposition(2, 1, 2));
  EXPECT_EQ(p * basis_vector(4, index_of({0, 1}, 2)), basis_vector(4, index_of({1, 0}, 2)));
  const TensorContext c3{3, 2};
  const Permutation cyc = Permutation::cycle(3, {1, 2, 3});
  EXPECT_EQ(perm_operator(c3, cyc), perm_oracle(3, 2, cyc));
}

TEST(PermOperator, MatchesDefinitionForAllPermutations) {
  for (std::size_t n : {2, 3, 4}) {
    for (const auto& pi : all_permutations(static_cast<int>(n))) {
      EXPECT_EQ(perm_operator(TensorContext{n, 2}, pi), perm_oracle(n, 2, pi));
    }
  }
  for (const auto& pi : all_permutations(3)) {
    EXPECT_EQ(perm_operator(TensorContext{3, 3}, pi), perm_oracle(3, 3, pi));
  }
}

TEST(PermOperator, CompositionRule) {
  // Applying both sides to every basis vector through the oracle: the literal
  // rule composes in reverse, P_pi P_sigma = P_{sigma pi}.
  for (std::size_t n : {3, 4}) {
    const TensorContext ctx{n, 2};
    const auto perms = all_permutations(static_cast<int>(n));
    for (const auto& pi : perms) {
      for (const auto& sigma : perms) {
        const RationalMatrix lhs = perm_operator(ctx, pi) * perm_operator(ctx, sigma);
        for (std::size_t col = 0; col < ctx.dimension(); ++col) {
          const auto x = digits_of(col, n, 2);
          std::vector<std::size_t> y(n);
          for (std::size_t k = 1; k <= n; ++k) {
            y[k - 1] = x[(sigma * pi)(static_cast<int>(k)) - 1];
          }
          ASSERT_EQ(lhs * basis_vector(ctx.dimension(), col),
                    basis_vector(ctx.dimension(), index_of(y, 2)));
        }
        EXPECT_EQ(permutation_action(ctx, pi * sigma),
                  permutation_action(ctx, pi) * permutation_action(ctx, sigma));
      }
    }
  }
}

TEST(EmbedPair, Examples) {
  std::mt19937_64 rng(3);
  const RationalMatrix op = testing::random_matrix(rng, 4, 4);
  const TensorContext c2{2, 2};
  EXPECT_EQ(embed_pair(c2, op, 1, 2), op);
  const RationalMatrix p = swap_operator(2);
  EXPECT_EQ(embed_pair(c2, op, 2, 1), p * op * p);
  const TensorContext c3{3, 3};
  const RationalMatrix s13 = embed_pair(c3, swap_operator(3), 1, 3);
  for (std::size_t a = 0; a < 3; ++a) {
    for (std::size_t b = 0; b < 3; ++b) {
      for (std::size_t c = 0; c < 3; ++c) {
        EXPECT_EQ(s13 * basis_vector(27, index_of({a, b, c}, 3)),
                  basis_vector(27, index_of({c, b, a}, 3)));
      }
    }
  }
  EXPECT_THROW(embed_pair(c3, swap_operator(3), 2, 2), InvalidSites);
  EXPECT_THROW(embed_pair(c3, swap_operator(3), 1, 4), InvalidSites);
}

TEST(EmbedPair, AdjacentIsKronWithIdentity) {
  std::mt19937_64 rng(5);
  const RationalMatrix op = testing::random_matrix(rng, 4, 4);
  const TensorContext ctx{4, 2};
  const RationalMatrix id2 = RationalMatrix::identity(2);
  EXPECT_EQ(embed_pair(ctx, op, 2, 3), kron(kron(id2, op), id2));
  EXPECT_EQ(embed_pair(ctx, op, 1, 3),
            embed_pair(ctx, swap_operator(2), 2, 3) * embed_pair(ctx, op, 1, 2) *
                embed_pair(ctx, swap_operator(2), 2, 3));
}

TEST(EmbedPair, DisjointPairsCommute) {
  std::mt19937_64 rng(9);
  const TensorContext ctx{4, 2};
  const std::pair<std::size_t, std::size_t> pairs[][2] = {
      {{1, 2}, {3, 4}}, {{2, 1}, {4, 3}}, {{1, 3}, {2, 4}}, {{4, 1}, {3, 2}}};
  for (const auto& pr : pairs) {
    const RationalMatrix a = testing::random_matrix(rng, 4, 4);
    const RationalMatrix b = testing::random_matrix(rng, 4, 4);
    const RationalMatrix x = embed_pair(ctx, a, pr[0].first, pr[0].second);
    const RationalMatrix y = embed_pair(ctx, b, pr[1].first, pr[1].second);
    EXPECT_EQ(x * y, y * x);
  }
}

TEST(ApplyPair, AgreesWithEmbedding) {
  std::mt19937_64 rng(13);
  const TensorContext ctx{3, 2};
  const RationalMatrix op = testing::random_matrix(rng, 4, 4);
  const RationalMatrix m = testing::random_matrix(rng, 8, 8);
  EXPECT_EQ(right_apply_pair(m, ctx, op, 3, 1), m * embed_pair(ctx, op, 3, 1));
  EXPECT_EQ(left_apply_pair(m, ctx, op, 2, 3), embed_pair(ctx, op, 2, 3) * m);
}

TEST(ColumnSpace, Examples) {
  const ColumnSpace id = column_space_basis(RationalMatrix::identity(4));
  EXPECT_EQ(id.rank, 4u);
  EXPECT_EQ(id.pivots, (std::vector<std::size_t>{0, 1, 2, 3}));
  const ColumnSpace zero = column_space_basis(RationalMatrix(3, 3));
  EXPECT_EQ(zero.rank, 0u);
  EXPECT_EQ(zero.basis.cols(), 0u);
  const RationalMatrix sym = RationalMatrix::identity(4) + swap_operator(2);
  EXPECT_EQ(column_space_basis(sym).rank, 3u);
}

TEST(ColumnSpace, ColumnsLieInSpan) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    const RationalMatrix m =
        testing::random_matrix(rng, 6, 3) * testing::random_matrix(rng, 3, 6);
    const ColumnSpace cs = column_space_basis(m);
    EXPECT_LE(cs.rank, 3u);
    const RationalMatrix l = left_inverse(cs.basis);
    EXPECT_TRUE((m - cs.basis * (l * m)).is_zero());
    for (std::size_t j = 0; j < cs.rank; ++j) {
      for (std::size_t r = 0; r < 6; ++r) EXPECT_EQ(cs.basis(r, j), m(r, cs.pivots[j]));
    }
  }
}

TEST(Rank, FunctionMatrixAgreesWithFractionFree) {
  FunctionMatrix m(3, 3);
  m(0, 0) = t();
  m(0, 1) = t() + 1;
  m(1, 0) = t() * t();
  m(1, 1) = t() * (t() + 1);
  m(2, 2) = RationalFunction(1) / (t() - 2);
  EXPECT_EQ(rank(m), 2u);
  EXPECT_EQ(rank_fraction_free(m), 2u);
}

TEST(Inverse, RoundTrip) {
  std::mt19937_64 rng(19);
  RationalMatrix m = testing::random_matrix(rng, 4, 4) + RationalMatrix::identity(4) * Rational(17);
  EXPECT_EQ(m * inverse(m), RationalMatrix::identity(4));
  EXPECT_THROW(inverse(RationalMatrix(2, 2)), SingularMatrix);
}

TEST(Restrict, Examples) {
  std::mt19937_64 rng(23);
  RationalMatrix b = testing::random_matrix(rng, 4, 2);
  b(0, 0) = Rational(1);
  b(0, 1) = Rational(0);
  b(1, 0) = Rational(0);
  b(1, 1) = Rational(1);
  EXPECT_EQ(restrict_to_subspace(fm(RationalMatrix::identity(4)), b),
            fm(RationalMatrix::identity(2)));
  RationalMatrix e(3, 2);
  e(0, 0) = Rational(1);
  e(1, 1) = Rational(1);
  const FunctionMatrix two = fm(RationalMatrix::identity(3)) * RationalFunction(2);
  EXPECT_EQ(restrict_to_subspace(two, e), fm(RationalMatrix::identity(2)) * RationalFunction(2));
}

TEST(Restrict, Errors) {
  RationalMatrix e(3, 1);
  e(0, 0) = Rational(1);
  FunctionMatrix shift(3, 3);
  shift(1, 0) = t();
  EXPECT_THROW(restrict_to_subspace(shift, e), SubspaceNotInvariant);
  RationalMatrix degenerate(3, 2);
  degenerate(0, 0) = Rational(1);
  degenerate(0, 1) = Rational(2);
  EXPECT_THROW(restrict_to_subspace(fm(RationalMatrix::identity(3)), degenerate),
               DegenerateBasis);
}

TEST(Restrict, BasisCovariance) {
  // m(t) preserving span(B): m = B X(t) L + (Id - B L) Y with L B = Id.
  std::mt19937_64 rng(29);
  RationalMatrix b = testing::random_matrix(rng, 5, 2);
  b(0, 0) = Rational(1);
  b(0, 1) = Rational(0);
  b(1, 0) = Rational(0);
  b(1, 1) = Rational(1);
  const RationalMatrix l = left_inverse(b);
  FunctionMatrix x(2, 2);
  x(0, 0) = t();
  x(0, 1) = RationalFunction(1) / (t() + 1);
  x(1, 0) = RationalFunction(3);
  x(1, 1) = t() * t();
  const FunctionMatrix m = multiply(multiply(fm(b), x), l);
  const FunctionMatrix restricted = restrict_to_subspace(m, b);
  EXPECT_EQ(restricted, x);
  RationalMatrix g{{Rational(2), Rational(1)}, {Rational(1), Rational(1)}};
  const FunctionMatrix conj = restrict_to_subspace(m, b * g);
  EXPECT_EQ(conj, multiply(multiply(fm(inverse(g)), restricted), g));
}

}  // namespace
}  // namespace ybfuse
