#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ybfuse/combinatorics/tableau.hpp"
#include "ybfuse/fusion/consecutive.hpp"
#include "ybfuse/kernels/identity_check.hpp"
#include "ybfuse/kernels/kernel.hpp"
#include "ybfuse/linalg/elimination.hpp"

namespace ybfuse {

class InvalidContents : public Error {
 public:
  using Error::Error;
};

// A factor of a directly evaluated product sits on a pole.
class SingularContents : public Error {
 public:
  using Error::Error;
};

class SchurWeylMismatch : public Error {
 public:
  using Error::Error;
};

class NotAdmissible : public Error {
 public:
  using Error::Error;
};

// Defining: prod_{i=1..n'} R_{n,i_}...R_{1,i_}.
// Alternative: prod_{i=n..1} R_{i,1_}...R_{i,n'_}.
enum class FusedOrder { Defining, Alternative };

// Factors of R_{c,cbar} with c on sites first+1..first+n and cbar on
// second+1..second+n'. The argument of R_{j,i_} is combine(x, c_j ./. cbar_i)
// where x carries the given u, v flags.
FactorProduct fused_factor_list(const KernelSpec& k, const ContentString& c,
                                const ContentString& cbar, std::size_t first,
                                std::size_t second, FusedOrder order,
                                int u_flag, int v_flag);

FunctionMatrix fused_product(const KernelSpec& k, const ContentString& c,
                             const ContentString& cbar, FusedOrder order);

struct FusedOperator {
  KernelSpec kernel;
  ContentString c;
  ContentString cbar;
  FunctionMatrix matrix;
};

// Computes both orders and throws if they differ.
FusedOperator fused_operator(const KernelSpec& k, const ContentString& c,
                             const ContentString& cbar);

enum class ProductOrder { Lex, ReverseLex };

// prod_{i<j} R_{i,j}(c_i ./. c_j) in the given order, evaluated directly.
// Throws SingularContents if a factor has a pole.
RationalMatrix f_operator_ordered(const KernelSpec& k, const ContentString& c,
                                  ProductOrder order);
// Lex product, cross-checked against reverse-lex.
RationalMatrix f_operator(const KernelSpec& k, const ContentString& c);
// Bracketed R^ product; cross-checked against F(c) P_{w_n}.
RationalMatrix f_hat_operator(const KernelSpec& k, const ContentString& c);
// The bracketed product alone.
RationalMatrix f_hat_product(const KernelSpec& k, const ContentString& c);

RationalMatrix longest_element_operator(const TensorContext& ctx);

enum class EvaluationForm { F, FHat };

// Consecutive evaluation of F (form F) or F^ (form FHat) at c.
RationalMatrix consecutive_operator(const KernelSpec& k, const ContentString& c,
                                    EvaluationForm form);

struct InvariantSubspace {
  std::optional<StandardTableau> tableau;
  ContentString contents;
  RationalMatrix f;      // F(c)
  ColumnSpace space;     // pivot columns of f
};

// Contents used for tableau t under kernel k: quantum for the Hecke kinds.
ContentString kernel_contents(const KernelSpec& k, const StandardTableau& t);

std::uint64_t expected_rank(const KernelSpec& k, const Partition& shape);

// F(T) by consecutive evaluation (F-form for additive kernels, F^-form then
// F = F^ P_{w_n} for multiplicative ones). Rank is checked against the
// tableau count; throws SchurWeylMismatch.
InvariantSubspace f_of_tableau(const KernelSpec& k, const StandardTableau& t);

// Image of the directly evaluated F(c).
InvariantSubspace subspace_of_contents(const KernelSpec& k,
                                       const ContentString& c);

using BasisPair = std::pair<RationalMatrix, RationalMatrix>;
// Columns scaled so that the first nonzero entry of each is 1.
RationalMatrix leading_normalized(RationalMatrix b);
// Default bases: leading_normalized pivot columns of F(T) and F(T2).

FunctionMatrix restrict_fused(const KernelSpec& k, const StandardTableau& t,
                              const StandardTableau& t2,
                              const std::optional<BasisPair>& bases =
                                  std::nullopt);

// A_k = P_{k,k+1} R_{k+1,k}(c_{k+1} ./. c_k); kpos is 1-based.
RationalMatrix conjugation_Ak(const KernelSpec& k, const ContentString& c,
                              int kpos);
// gamma_k^{-1} R_{k,k+1}(c_k ./. c_{k+1}) P_{k,k+1}.
RationalMatrix conjugation_Ak_inverse(const KernelSpec& k,
                                      const ContentString& c, int kpos);
bool is_admissible(const KernelSpec& k, const ContentString& c, int kpos);

struct EquivalenceReport {
  bool pass = false;
  bool spans_match = false;
  FunctionMatrix original;    // basis B_T (x) B_T2
  FunctionMatrix transposed;  // basis A_k B_T (x) B_T2
  std::string detail;
};

EquivalenceReport verify_transposition_equivalence(const KernelSpec& k,
                                                   const StandardTableau& t,
                                                   const StandardTableau& t2,
                                                   int kpos);

std::size_t fused_degree_bound(std::size_t n, std::size_t n1, std::size_t n2);

IdentityReport verify_fused_ybe(const KernelSpec& k, const ContentString& c,
                                const ContentString& cbar,
                                const ContentString& cbarbar,
                                std::optional<std::size_t> degree_bound =
                                    std::nullopt);

struct InvarianceReport {
  bool left = false;      // W_c (x) V^{n'}
  bool right = false;     // V^{n} (x) W_cbar
  bool combined = false;  // W_c (x) W_cbar
  bool pass() const { return left && right && combined; }
};

InvarianceReport verify_invariance(const KernelSpec& k,
                                   const InvariantSubspace& w,
                                   const InvariantSubspace& wbar);

// P R_{k+1,k} R_{c,cbar}(u) = R_{c^{s_k},cbar}(u) P R_{k+1,k}.
bool verify_dep_R(const KernelSpec& k, const ContentString& c,
                  const ContentString& cbar, int kpos);
// P R_{k+1,k} F(c) = F(c^{s_k}) P R_{k,k+1}.
bool verify_dep_F(const KernelSpec& k, const ContentString& c, int kpos);

}  // namespace ybfuse
