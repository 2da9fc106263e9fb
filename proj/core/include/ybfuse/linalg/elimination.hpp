#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ybfuse/linalg/matrix.hpp"

namespace ybfuse {

class SubspaceNotInvariant : public Error {
 public:
  using Error::Error;
};

class DegenerateBasis : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

struct ColumnSpace {
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;  // 0-based, increasing
  RationalMatrix basis;             // pivot columns of the input
};

ColumnSpace column_space_basis(const RationalMatrix& m);

std::size_t rank(const RationalMatrix& m);

// Throws SingularMatrix.
RationalMatrix inverse(const RationalMatrix& m);

// Rank over Q(t): evaluated at two seeded pole-free points; on disagreement
// falls back to rank_fraction_free.
std::size_t rank(const FunctionMatrix& m, std::uint64_t seed = 0x5eed);

// Bareiss elimination over Q[t] after clearing row denominators.
std::size_t rank_fraction_free(const FunctionMatrix& m);

// Left inverse of a full-column-rank B built from its pivot rows.
RationalMatrix left_inverse(const RationalMatrix& basis);

// Returns X with m * B = B * X; verifies that identity before returning.
FunctionMatrix restrict_to_subspace(const FunctionMatrix& m,
                                    const RationalMatrix& basis);

}  // namespace ybfuse
