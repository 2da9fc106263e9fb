#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "ybfuse/linalg/matrix.hpp"
#include "ybfuse/permutation.hpp"

namespace ybfuse {

// V^{(x)n} with dim V = d. Site 1 is the most significant digit of an index.
struct TensorContext {
  std::size_t sites = 0;
  std::size_t local_dim = 0;

  std::size_t dimension() const;
  // d^(n - site); sites are 1-based.
  std::size_t stride(std::size_t site) const;
  std::vector<std::size_t> digits(std::size_t index) const;
  std::size_t index(const std::vector<std::size_t>& digits) const;
};

// P_pi(x_1 (x) ... (x) x_n) = x_pi(1) (x) ... (x) x_pi(n), taken literally.
// With this rule perm_operator(p) * perm_operator(s) = perm_operator(s * p).
RationalMatrix perm_operator(const TensorContext& ctx, const Permutation& pi);

// Homomorphic action: permutation_action(p*s) = action(p) * action(s).
// Sends x_k to position p(k); agrees with perm_operator on transpositions.
RationalMatrix permutation_action(const TensorContext& ctx,
                                  const Permutation& pi);

// Swap on V (x) V.
RationalMatrix swap_operator(std::size_t d);

void check_sites(const TensorContext& ctx, std::size_t i, std::size_t j);

namespace detail {

template <class O>
struct PairOperator {
  std::size_t si = 0, sj = 0, d = 0;
  // For each local index (x*d + y): nonzero (offset, value) pairs along the
  // column (for right application) or row (for left application).
  std::vector<std::vector<std::pair<std::size_t, O>>> lists;
};

template <class O>
PairOperator<O> prepare(const TensorContext& ctx, const Matrix<O>& op,
                        std::size_t i, std::size_t j, bool by_column) {
  check_sites(ctx, i, j);
  const std::size_t d = ctx.local_dim;
  if (op.rows() != d * d || op.cols() != d * d) {
    throw SizeMismatch("two-site operator must be d^2 x d^2");
  }
  PairOperator<O> p;
  p.si = ctx.stride(i);
  p.sj = ctx.stride(j);
  p.d = d;
  p.lists.resize(d * d);
  for (std::size_t outer = 0; outer < d * d; ++outer) {
    for (std::size_t inner = 0; inner < d * d; ++inner) {
      const O& v = by_column ? op(inner, outer) : op(outer, inner);
      if (is_zero(v)) continue;
      std::size_t off = (inner / d) * p.si + (inner % d) * p.sj;
      p.lists[outer].emplace_back(off, v);
    }
  }
  return p;
}

}  // namespace detail

// m * embed_pair(op, i, j) without forming the embedding.
template <class S, class O>
Matrix<S> right_apply_pair(const Matrix<S>& m, const TensorContext& ctx,
                           const Matrix<O>& op, std::size_t i, std::size_t j) {
  const auto p = detail::prepare(ctx, op, i, j, true);
  const std::size_t dim = ctx.dimension();
  if (m.cols() != dim) throw SizeMismatch("operand width");
  std::vector<std::size_t> base(dim), local(dim);
  for (std::size_t a = 0; a < dim; ++a) {
    std::size_t ai = (a / p.si) % p.d, aj = (a / p.sj) % p.d;
    base[a] = a - ai * p.si - aj * p.sj;
    local[a] = ai * p.d + aj;
  }
  Matrix<S> out(m.rows(), dim);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t a = 0; a < dim; ++a) {
      S acc{};
      for (const auto& [off, v] : p.lists[local[a]]) {
        const S& e = m(r, base[a] + off);
        if (is_zero(e)) continue;
        acc += e * v;
      }
      out(r, a) = std::move(acc);
    }
  }
  return out;
}

// embed_pair(op, i, j) * m without forming the embedding.
template <class S, class O>
Matrix<S> left_apply_pair(const Matrix<S>& m, const TensorContext& ctx,
                          const Matrix<O>& op, std::size_t i, std::size_t j) {
  const auto p = detail::prepare(ctx, op, i, j, false);
  const std::size_t dim = ctx.dimension();
  if (m.rows() != dim) throw SizeMismatch("operand height");
  Matrix<S> out(dim, m.cols());
  for (std::size_t b = 0; b < dim; ++b) {
    std::size_t bi = (b / p.si) % p.d, bj = (b / p.sj) % p.d;
    std::size_t base = b - bi * p.si - bj * p.sj;
    const auto& list = p.lists[bi * p.d + bj];
    for (const auto& [off, v] : list) {
      const std::size_t src = base + off;
      for (std::size_t c = 0; c < m.cols(); ++c) {
        const S& e = m(src, c);
        if (is_zero(e)) continue;
        out(b, c) += v * e;
      }
    }
  }
  return out;
}

// Operator acting as op on copies (i, j), in that order, and trivially
// elsewhere.
template <class S>
Matrix<S> embed_pair(const TensorContext& ctx, const Matrix<S>& op,
                     std::size_t i, std::size_t j) {
  return right_apply_pair(Matrix<S>::identity(ctx.dimension()), ctx, op, i, j);
}

}  // namespace ybfuse
