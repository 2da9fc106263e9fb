#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ybfuse/exact/rational_function.hpp"
#include "ybfuse/linalg/matrix.hpp"

namespace ybfuse {

enum class KernelKind { Yang, SuperYang, Hecke, SuperHecke };
enum class Convention { Additive, Multiplicative };

KernelKind parse_kernel_kind(std::string_view name);
std::string kernel_kind_name(KernelKind kind);

class UnitarityViolated : public Error {
 public:
  using Error::Error;
};

// One of the four base solutions together with its dimensions.
class KernelSpec {
 public:
  // Validates: d = N + M >= 1, M = 0 for Yang and Hecke, q not in {0, 1, -1}
  // for the Hecke kinds.
  KernelSpec(KernelKind kind, int N, int M = 0,
             std::optional<Rational> q = std::nullopt);

  static KernelSpec yang(int N) { return {KernelKind::Yang, N}; }
  static KernelSpec super_yang(int N, int M) {
    return {KernelKind::SuperYang, N, M};
  }
  static KernelSpec hecke(int N, const Rational& q) {
    return {KernelKind::Hecke, N, 0, q};
  }
  static KernelSpec super_hecke(int N, int M, const Rational& q) {
    return {KernelKind::SuperHecke, N, M, q};
  }

  KernelKind kind() const { return kind_; }
  int N() const { return N_; }
  int M() const { return M_; }
  std::size_t dim() const { return static_cast<std::size_t>(N_ + M_); }
  bool is_super() const;
  bool is_hecke() const;
  // Throws for the Yang kinds.
  const Rational& q() const;
  Convention convention() const;
  // 0 for the first N basis vectors, 1 for the last M.
  std::vector<int> grading() const;
  // "u" or "a".
  std::string variable_name() const;
  std::string describe() const;

  // a + b or a * b.
  RationalFunction combine(const RationalFunction& a,
                           const RationalFunction& b) const;
  Rational combine(const Rational& a, const Rational& b) const;
  // a - b or a / b.
  RationalFunction difference(const RationalFunction& a,
                              const RationalFunction& b) const;
  Rational difference(const Rational& a, const Rational& b) const;
  // -t or 1/t.
  RationalFunction dual(const RationalFunction& t) const;
  Rational unit() const;

 private:
  KernelKind kind_;
  int N_;
  int M_;
  std::optional<Rational> q_;
};

// Diagonal (-1)^{|i||j|} on e_i (x) e_j.
RationalMatrix graded_identity(const std::vector<int>& grading);
// e_i (x) e_j -> (-1)^{|i||j|} e_j (x) e_i.
RationalMatrix signed_swap(const std::vector<int>& grading);
// The constant braid-type operator: P, P~, or the (super) Hecke R^.
RationalMatrix r_hat_constant(const KernelSpec& k);

// R(t) in the kernel's spectral variable t.
FunctionMatrix r_matrix(const KernelSpec& k);
// R(t) * P.
FunctionMatrix r_hat_matrix(const KernelSpec& k);
// Scalar with R(t) R_{2,1}(t*) = gamma(t) Id; t* = -t or 1/t.
RationalFunction gamma(const KernelSpec& k);

// The expected closed forms, used as independent references.
RationalFunction gamma_additive_reference();
RationalFunction gamma_multiplicative_reference(const Rational& q);

}  // namespace ybfuse
