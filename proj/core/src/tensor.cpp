#include "ybfuse/linalg/tensor.hpp"

#include <string>

namespace ybfuse {

std::size_t TensorContext::dimension() const {
  std::size_t dim = 1;
  for (std::size_t k = 0; k < sites; ++k) dim *= local_dim;
  return dim;
}

std::size_t TensorContext::stride(std::size_t site) const {
  std::size_t s = 1;
  for (std::size_t k = site; k < sites; ++k) s *= local_dim;
  return s;
}

std::vector<std::size_t> TensorContext::digits(std::size_t index) const {
  std::vector<std::size_t> out(sites);
  for (std::size_t k = sites; k-- > 0;) {
    out[k] = index % local_dim;
    index /= local_dim;
  }
  return out;
}

std::size_t TensorContext::index(const std::vector<std::size_t>& digits) const {
  std::size_t idx = 0;
  for (std::size_t v : digits) idx = idx * local_dim + v;
  return idx;
}

void check_sites(const TensorContext& ctx, std::size_t i, std::size_t j) {
  if (i == j || i < 1 || j < 1 || i > ctx.sites || j > ctx.sites) {
    throw InvalidSites("invalid site pair (" + std::to_string(i) + "," +
                       std::to_string(j) + ") for " +
                       std::to_string(ctx.sites) + " sites");
  }
}

RationalMatrix perm_operator(const TensorContext& ctx, const Permutation& pi) {
  if (static_cast<std::size_t>(pi.size()) != ctx.sites) {
    throw SizeMismatch("permutation size differs from site count");
  }
  const std::size_t dim = ctx.dimension();
  RationalMatrix m(dim, dim);
  std::vector<std::size_t> out(ctx.sites);
  for (std::size_t a = 0; a < dim; ++a) {
    auto in = ctx.digits(a);
    for (std::size_t k = 0; k < ctx.sites; ++k) {
      out[k] = in[static_cast<std::size_t>(pi(static_cast<int>(k) + 1)) - 1];
    }
    m(ctx.index(out), a) = Rational(1);
  }
  return m;
}

RationalMatrix permutation_action(const TensorContext& ctx,
                                  const Permutation& pi) {
  return perm_operator(ctx, pi.inverse());
}

RationalMatrix swap_operator(std::size_t d) {
  return perm_operator(TensorContext{2, d}, Permutation::transposition(2, 1, 2));
}

}  // namespace ybfuse
