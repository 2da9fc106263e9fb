#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ybfuse/kernels/kernel.hpp"
#include "ybfuse/linalg/tensor.hpp"

namespace ybfuse {

// Argument u^a v^b shift (multiplicative) or a u + b v + shift (additive),
// with a, b in {0, 1}.
struct SpectralArgument {
  int u = 0;
  int v = 0;
  Rational shift;
};

// A two-site factor kernel_{i,j}(argument); sites are 1-based.
struct PairFactor {
  std::size_t i = 0;
  std::size_t j = 0;
  SpectralArgument arg;
};

using FactorProduct = std::vector<PairFactor>;

struct GridPoint {
  Rational u;
  Rational v;
};

struct IdentityReport {
  bool pass = false;
  std::size_t points = 0;
  std::size_t degree_bound = 0;
  std::optional<GridPoint> counterexample;
};

// Two-variable operator identity lhs = rhs tested exactly on a pole-free
// product grid with degree_bound + 1 values per variable. Values are taken
// greedily from 1, 2, 3, ...
IdentityReport check_product_identity(const FunctionMatrix& kernel,
                                      Convention convention,
                                      const TensorContext& ctx,
                                      const FactorProduct& lhs,
                                      const FactorProduct& rhs,
                                      std::size_t degree_bound);

// Yang-Baxter equation R12(u)R13(u.v)R23(v) = R23(v)R13(u.v)R12(u) for an
// arbitrary two-site function, u.v = u+v or u*v.
IdentityReport ybe_check(const FunctionMatrix& kernel, Convention convention,
                         std::size_t local_dim, std::size_t degree_bound = 8);

IdentityReport base_ybe_check(const KernelSpec& k,
                              std::size_t degree_bound = 8);

// R^2 - (q - q^-1) R - Id = 0.
bool check_quadratic(const RationalMatrix& r_hat, const Rational& q);
// R12 R23 R12 = R23 R12 R23 on V^{(x)3}.
bool check_braid(const RationalMatrix& r_hat, std::size_t local_dim);

// With R~(u) = Id - P~/u and P~ braiding, checks
// R~12(u) P~23 R~12(u+v) P~23 P~12 P~23 R~12(v) P~23 P~12 against the
// reverse order.
IdentityReport braided_super_ybe_check(const std::vector<int>& grading,
                                       std::size_t degree_bound = 8);

// P replaced by a perturbed, non-symmetric operator; used as a negative
// control.
FunctionMatrix mutated_yang_kernel(std::size_t d);

}  // namespace ybfuse
