#include "ybfuse/kernels/kernel.hpp"

#include "ybfuse/combinatorics/tableau.hpp"
#include "ybfuse/linalg/tensor.hpp"

namespace ybfuse {

KernelKind parse_kernel_kind(std::string_view name) {
  if (name == "yang") return KernelKind::Yang;
  if (name == "super-yang") return KernelKind::SuperYang;
  if (name == "hecke") return KernelKind::Hecke;
  if (name == "super-hecke") return KernelKind::SuperHecke;
  throw InvalidArgument("unknown kernel kind '" + std::string(name) + "'");
}

std::string kernel_kind_name(KernelKind kind) {
  switch (kind) {
    case KernelKind::Yang: return "yang";
    case KernelKind::SuperYang: return "super-yang";
    case KernelKind::Hecke: return "hecke";
    case KernelKind::SuperHecke: return "super-hecke";
  }
  return "?";
}

KernelSpec::KernelSpec(KernelKind kind, int N, int M, std::optional<Rational> q)
    : kind_(kind), N_(N), M_(M), q_(std::move(q)) {
  if (N < 0 || M < 0 || N + M < 1) {
    throw InvalidArgument("need N, M >= 0 and N + M >= 1");
  }
  if (!is_super() && M != 0) {
    throw InvalidArgument(kernel_kind_name(kind) + " kernel takes M = 0");
  }
  if (is_hecke()) {
    if (!q_) throw InvalidDeformationParameter("Hecke kernels need q");
    check_deformation_parameter(*q_);
  } else {
    q_.reset();
  }
}

bool KernelSpec::is_super() const {
  return kind_ == KernelKind::SuperYang || kind_ == KernelKind::SuperHecke;
}

bool KernelSpec::is_hecke() const {
  return kind_ == KernelKind::Hecke || kind_ == KernelKind::SuperHecke;
}

const Rational& KernelSpec::q() const {
  if (!q_) throw InvalidArgument("kernel has no deformation parameter");
  return *q_;
}

Convention KernelSpec::convention() const {
  return is_hecke() ? Convention::Multiplicative : Convention::Additive;
}

std::vector<int> KernelSpec::grading() const {
  std::vector<int> g(dim(), 0);
  for (int k = N_; k < N_ + M_; ++k) g[static_cast<std::size_t>(k)] = 1;
  return g;
}

std::string KernelSpec::variable_name() const { return is_hecke() ? "a" : "u"; }

std::string KernelSpec::describe() const {
  std::string s = kernel_kind_name(kind_) + " N=" + std::to_string(N_);
  if (is_super()) s += " M=" + std::to_string(M_);
  if (q_) s += " q=" + q_->to_display();
  return s;
}

RationalFunction KernelSpec::combine(const RationalFunction& a,
                                     const RationalFunction& b) const {
  return is_hecke() ? a * b : a + b;
}

Rational KernelSpec::combine(const Rational& a, const Rational& b) const {
  return is_hecke() ? a * b : a + b;
}

RationalFunction KernelSpec::difference(const RationalFunction& a,
                                        const RationalFunction& b) const {
  return is_hecke() ? a / b : a - b;
}

Rational KernelSpec::difference(const Rational& a, const Rational& b) const {
  return is_hecke() ? a / b : a - b;
}

RationalFunction KernelSpec::dual(const RationalFunction& t) const {
  return is_hecke() ? t.inverse() : -t;
}

Rational KernelSpec::unit() const { return is_hecke() ? Rational(1) : Rational(0); }

RationalMatrix graded_identity(const std::vector<int>& grading) {
  const std::size_t d = grading.size();
  RationalMatrix m(d * d, d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      m(i * d + j, i * d + j) = Rational((grading[i] && grading[j]) ? -1 : 1);
    }
  }
  return m;
}

RationalMatrix signed_swap(const std::vector<int>& grading) {
  return graded_identity(grading) * swap_operator(grading.size());
}

RationalMatrix r_hat_constant(const KernelSpec& k) {
  const auto g = k.grading();
  if (!k.is_hecke()) return signed_swap(g);
  const std::size_t d = k.dim();
  const Rational q = k.q();
  const Rational qi = q.inverse();
  RationalMatrix m(d * d, d * d);
  // Column i*d + j holds the image of e_i (x) e_j.
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const std::size_t col = i * d + j;
      if (i == j) {
        Rational sign(g[i] ? -1 : 1);
        m(col, col) = (sign * (q + qi) + (q - qi)) / Rational(2);
        continue;
      }
      m(j * d + i, col) = Rational((g[i] && g[j]) ? -1 : 1);
      if (i > j) m(col, col) = q - qi;
    }
  }
  return m;
}

FunctionMatrix r_matrix(const KernelSpec& k) {
  const std::size_t d = k.dim();
  const RationalFunction t = RationalFunction::variable();
  const FunctionMatrix p = to_function_matrix(swap_operator(d));
  if (!k.is_hecke()) {
    return to_function_matrix(graded_identity(k.grading())) - p * t.inverse();
  }
  const Rational z = k.q() - k.q().inverse();
  // (q - q^-1) / (t^-1 - 1) = (q - q^-1) t / (1 - t)
  const RationalFunction s =
      RationalFunction(z) * t / (RationalFunction(1) - t);
  return to_function_matrix(r_hat_constant(k) * swap_operator(d)) + p * s;
}

FunctionMatrix r_hat_matrix(const KernelSpec& k) {
  return multiply(r_matrix(k), swap_operator(k.dim()));
}

RationalFunction gamma(const KernelSpec& k) {
  const TensorContext ctx{2, k.dim()};
  const FunctionMatrix r = r_matrix(k);
  const FunctionMatrix r_dual =
      compose(r, k.dual(RationalFunction::variable()));
  const FunctionMatrix prod = r * embed_pair(ctx, r_dual, 2, 1);
  const RationalFunction g = prod(0, 0);
  for (std::size_t i = 0; i < prod.rows(); ++i) {
    for (std::size_t j = 0; j < prod.cols(); ++j) {
      const RationalFunction& e = prod(i, j);
      if ((i == j && e != g) || (i != j && !e.is_zero())) {
        throw UnitarityViolated("R(t) R21(t*) is not scalar for " +
                                k.describe());
      }
    }
  }
  return g;
}

RationalFunction gamma_additive_reference() {
  const Polynomial u = Polynomial::variable();
  return RationalFunction::normalize(u * u - Polynomial(1), u * u);
}

RationalFunction gamma_multiplicative_reference(const Rational& q) {
  const Polynomial a = Polynomial::variable();
  const Polynomial q2(q.pow(2)), qm2(q.pow(-2));
  const Polynomial one(1);
  return RationalFunction::normalize((a - q2) * (a - qm2),
                                     (a - one) * (a - one));
}

}  // namespace ybfuse
