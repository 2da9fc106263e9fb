#include "ybfuse/verify/suites.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>
#include <sstream>

#include "ybfuse/algebra/algebra.hpp"
#include "ybfuse/fusion/fusion.hpp"
#include "ybfuse/kernels/identity_check.hpp"
#include "ybfuse/verify/reproduce.hpp"

namespace ybfuse {

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

template <class F>
void run(SuiteReport& rep, std::string name, F&& f) {
  Check c;
  c.name = std::move(name);
  const auto t0 = std::chrono::steady_clock::now();
  try {
    if constexpr (std::is_same_v<decltype(f()), bool>) {
      c.pass = f();
    } else {
      Outcome o = f();
      c.pass = o.pass;
      c.detail = std::move(o.detail);
    }
  } catch (const std::exception& e) {
    c.pass = false;
    c.detail = e.what();
  }
  c.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  rep.checks.push_back(std::move(c));
}

Outcome from_identity(const IdentityReport& r) {
  Outcome o{r.pass, std::to_string(r.points) + " points, D = " +
                        std::to_string(r.degree_bound)};
  if (r.counterexample) {
    o.detail += ", differs at (" + r.counterexample->u.to_display() + ", " +
                r.counterexample->v.to_display() + ")";
  }
  return o;
}

const Rational& first_q(const SuiteConfig& cfg) {
  static const Rational two(2);
  return cfg.qs.empty() ? two : cfg.qs.front();
}

// Every kind at (N, M) in {(2,0), (1,1), (3,0), (2,1)} where it is defined.
std::vector<KernelSpec> dimension_sweep(const SuiteConfig& cfg) {
  if (!cfg.kernels.empty()) return cfg.kernels;
  std::vector<KernelSpec> out;
  const std::pair<int, int> dims[] = {{2, 0}, {1, 1}, {3, 0}, {2, 1}};
  for (auto [n, m] : dims) {
    if (m == 0) out.push_back(KernelSpec::yang(n));
    out.push_back(KernelSpec::super_yang(n, m));
    for (const auto& q : cfg.qs) {
      if (m == 0) out.push_back(KernelSpec::hecke(n, q));
      out.push_back(KernelSpec::super_hecke(n, m, q));
    }
  }
  return out;
}

// One kernel of each kind with local dimension 2.
std::vector<KernelSpec> small_kernels(const SuiteConfig& cfg) {
  if (!cfg.kernels.empty()) return cfg.kernels;
  const Rational& q = first_q(cfg);
  return {KernelSpec::yang(2), KernelSpec::super_yang(1, 1),
          KernelSpec::hecke(2, q), KernelSpec::super_hecke(1, 1, q)};
}

std::vector<StandardTableau> tableaux_of_size(int n) {
  std::vector<StandardTableau> out;
  for (const auto& lambda : partitions_of(n)) {
    for (auto& t : enumerate_syt(lambda)) out.push_back(std::move(t));
  }
  return out;
}

std::vector<StandardTableau> tableaux_up_to(int n) {
  std::vector<StandardTableau> out;
  for (int k = 1; k <= n; ++k) {
    for (auto& t : tableaux_of_size(k)) out.push_back(std::move(t));
  }
  return out;
}

std::string contents_string(const ContentString& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ",";
    s += c[i].to_display();
  }
  return s + ")";
}

// Distinct nonzero rationals p/7, avoiding poles of every factor.
ContentString random_contents(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> dist(-40, 40);
  ContentString c;
  while (c.size() < n) {
    const int p = dist(rng);
    if (p == 0) continue;
    Rational x(p, 7);
    if (std::find(c.begin(), c.end(), x) != c.end()) continue;
    c.push_back(x);
  }
  return c;
}

bool spans_equal(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows()) return false;
  RationalMatrix joined(a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t j = 0; j < a.cols(); ++j) joined(r, j) = a(r, j);
    for (std::size_t j = 0; j < b.cols(); ++j) joined(r, a.cols() + j) = b(r, j);
  }
  const std::size_t rj = rank(joined);
  return rj == rank(a) && rj == rank(b);
}

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

bool SuiteReport::pass() const { return failures() == 0; }

std::size_t SuiteReport::failures() const {
  return static_cast<std::size_t>(std::count_if(
      checks.begin(), checks.end(), [](const Check& c) { return !c.pass; }));
}

std::vector<std::string> suite_names() {
  return {"base-ybe",    "fused-ybe",  "unitarity",   "invariance",
          "equivalence", "schur-weyl", "idempotents", "nonstandard",
          "orders",      "golden"};
}

SuiteReport run_suite(const std::string& name, const SuiteConfig& config) {
  if (name == "base-ybe") return base_ybe_suite(config);
  if (name == "fused-ybe") return fused_ybe_suite(config);
  if (name == "unitarity") return unitarity_suite(config);
  if (name == "invariance") return invariance_suite(config);
  if (name == "equivalence") return equivalence_suite(config);
  if (name == "schur-weyl") return schur_weyl_suite(config);
  if (name == "idempotents") return idempotents_suite(config);
  if (name == "nonstandard") return nonstandard_suite(config);
  if (name == "orders") return orders_suite(config);
  if (name == "golden") return golden_suite(config);
  throw InvalidArgument("unknown suite '" + name + "'");
}

SuiteReport base_ybe_suite(const SuiteConfig& cfg) {
  SuiteReport rep{"base-ybe", {}};
  const std::size_t grid = cfg.grid.value_or(8);
  for (const auto& k : dimension_sweep(cfg)) {
    run(rep, "ybe " + k.describe(),
        [&] { return from_identity(base_ybe_check(k, grid)); });
    if (k.is_hecke()) {
      const RationalMatrix rh = r_hat_constant(k);
      run(rep, "quadratic relation " + k.describe(),
          [&] { return check_quadratic(rh, k.q()); });
      run(rep, "braid relation " + k.describe(),
          [&] { return check_braid(rh, k.dim()); });
    }
    if (k.kind() == KernelKind::SuperYang) {
      run(rep, "braided ybe " + k.describe(), [&] {
        return from_identity(braided_super_ybe_check(k.grading(), grid));
      });
    }
    if (k.is_super() && k.M() == 0) {
      run(rep, "reduces to the even kind " + k.describe(), [&] {
        const KernelSpec even = k.is_hecke() ? KernelSpec::hecke(k.N(), k.q())
                                             : KernelSpec::yang(k.N());
        return r_matrix(k) == r_matrix(even);
      });
    }
  }
  if (cfg.kernels.empty()) {
    for (std::size_t d : {2, 3}) {
      run(rep, "negative control: mutated Yang kernel d=" + std::to_string(d),
          [&] {
            const IdentityReport r =
                ybe_check(mutated_yang_kernel(d), Convention::Additive, d, grid);
            return Outcome{!r.pass, r.pass ? "mutated kernel passed"
                                           : "rejected as expected"};
          });
    }
  }
  return rep;
}

SuiteReport fused_ybe_suite(const SuiteConfig& cfg) {
  SuiteReport rep{"fused-ybe", {}};
  const auto r1 = StandardTableau::row(1);
  const auto r2 = StandardTableau::row(2);
  const auto c2 = StandardTableau::column(2);
  using Triple = std::array<StandardTableau, 3>;
  const std::vector<Triple> small = {{r2, r1, r1}, {c2, r1, r1}};
  const std::vector<Triple> large = {{r2, r2, r1}, {r2, c2, r1},
                                     {r1, r2, c2}, {c2, r1, r2},
                                     {r2, r2, r2}, {c2, r2, c2}};
  std::vector<KernelSpec> kernels = small_kernels(cfg);
  if (cfg.kernels.empty()) {
    const Rational& q = first_q(cfg);
    for (const auto& k : {KernelSpec::yang(3), KernelSpec::super_yang(2, 1),
                          KernelSpec::hecke(3, q),
                          KernelSpec::super_hecke(2, 1, q)}) {
      kernels.push_back(k);
    }
  }
  for (const auto& k : kernels) {
    const Rational unit = k.unit();
    run(rep, "single sites " + k.describe(), [&] {
      return from_identity(
          verify_fused_ybe(k, {unit}, {unit}, {unit}, cfg.grid));
    });
    std::vector<Triple> triples = small;
    if (k.dim() <= 2) triples.insert(triples.end(), large.begin(), large.end());
    for (const auto& tr : triples) {
      const std::string name = "tableaux " + tr[0].to_string() + " " +
                               tr[1].to_string() + " " + tr[2].to_string() +
                               " " + k.describe();
      run(rep, name, [&] {
        return from_identity(verify_fused_ybe(
            k, kernel_contents(k, tr[0]), kernel_contents(k, tr[1]),
            kernel_contents(k, tr[2]), cfg.grid));
      });
    }
  }
  if (cfg.kernels.empty()) {
    run(rep, "worked example contents (0,1) (0) (0) yang N=2", [&] {
      return from_identity(verify_fused_ybe(
          KernelSpec::yang(2), {Rational(0), Rational(1)}, {Rational(0)},
          {Rational(0)}, cfg.grid));
    });
  }
  return rep;
}

SuiteReport unitarity_suite(const SuiteConfig& cfg) {
  SuiteReport rep{"unitarity", {}};
  for (const auto& k : dimension_sweep(cfg)) {
    run(rep, "gamma " + k.describe(), [&] {
      const RationalFunction g = gamma(k);
      const RationalFunction want = k.is_hecke()
                                        ? gamma_multiplicative_reference(k.q())
                                        : gamma_additive_reference();
      return Outcome{g == want, g.to_string(k.variable_name())};
    });
  }
  return rep;
}

SuiteReport invariance_suite(const SuiteConfig& cfg) {
  SuiteReport rep{"invariance", {}};
  const int max_n = cfg.max_n > 0 ? cfg.max_n : 3;
  for (const auto& k : small_kernels(cfg)) {
    std::vector<InvariantSubspace> spaces;
    for (const auto& t : tableaux_up_to(max_n)) {
      if (expected_rank(k, t.shape()) == 0) continue;
      spaces.push_back(f_of_tableau(k, t));
    }
    for (const auto& w : spaces) {
      for (const auto& wbar : spaces) {
        if (wbar.contents.size() > 2) continue;
        run(rep,
            "W" + w.tableau->to_string() + " W" + wbar.tableau->to_string() +
                " " + k.describe(),
            [&] {
              const InvarianceReport r = verify_invariance(k, w, wbar);
              std::string d;
              if (!r.left) d += "left ";
              if (!r.right) d += "right ";
              if (!r.combined) d += "combined ";
              return Outcome{r.pass(), d.empty() ? "" : d + "not preserved"};
            });
      }
    }
  }
  if (cfg.kernels.empty()) {
    const KernelSpec k = KernelSpec::yang(2);
    const ContentString raw[] = {{Rational(0), Rational(1)},
                                 {Rational(0), Rational(-1)},
                                 {Rational(0), Rational(5)}};
    for (const auto& c : raw) {
      run(rep, "raw contents " + contents_string(c) + " with (0) yang N=2", [&] {
        const InvariantSubspace w = subspace_of_contents(k, c);
        const InvariantSubspace wbar = subspace_of_contents(k, {Rational(0)});
        return Outcome{verify_invariance(k, w, wbar).pass(),
                       "rank " + std::to_string(w.space.rank)};
      });
    }
  }
  return rep;
}

SuiteReport equivalence_suite(const SuiteConfig& cfg) {
  SuiteReport rep{"equivalence", {}};
  const int max_n = cfg.max_n > 0 ? cfg.max_n : 4;
  std::vector<KernelSpec> kernels = cfg.kernels;
  if (kernels.empty()) {
    kernels = {KernelSpec::yang(2), KernelSpec::hecke(2, first_q(cfg))};
  }
  for (const auto& k : kernels) {
    for (const auto& t : tableaux_up_to(max_n)) {
      if (expected_rank(k, t.shape()) == 0) continue;
      for (int kpos = 1; kpos < t.size(); ++kpos) {
        const auto ts = admissible_transposition(t, kpos);
        if (!ts) continue;
        std::vector<StandardTableau> seconds = {StandardTableau::row(1)};
        if (t.size() <= 3) seconds.push_back(StandardTableau::row(2));
        for (const auto& t2 : seconds) {
          run(rep,
              t.to_string() + " -> " + ts->to_string() + " (s_" +
                  std::to_string(kpos) + ") with " + t2.to_string() + " " +
                  k.describe(),
              [&] {
                const EquivalenceReport r =
                    verify_transposition_equivalence(k, t, t2, kpos);
                return Outcome{r.pass, r.detail};
              });
        }
      }
    }
  }
  return rep;
}

SuiteReport schur_weyl_suite(const SuiteConfig& cfg) {
  SuiteReport rep{"schur-weyl", {}};
  const int max_n = cfg.max_n > 0 ? cfg.max_n : 4;
  std::vector<KernelSpec> kernels = cfg.kernels;
  if (kernels.empty()) {
    const Rational& q = first_q(cfg);
    kernels = {KernelSpec::yang(2),          KernelSpec::yang(3),
               KernelSpec::hecke(2, q),      KernelSpec::hecke(3, q),
               KernelSpec::super_yang(1, 1), KernelSpec::super_yang(2, 1),
               KernelSpec::super_hecke(1, 1, q),
               KernelSpec::super_hecke(2, 1, q)};
  }
  for (const auto& k : kernels) {
    for (int n = 1; n <= max_n; ++n) {
      std::uint64_t total = 0;
      for (const auto& lambda : partitions_of(n)) {
        const auto tabs = enumerate_syt(lambda);
        const std::uint64_t want = expected_rank(k, lambda);
        total += want * tabs.size();
        for (const auto& t : tabs) {
          run(rep, "rank F" + t.to_string() + " " + k.describe(), [&] {
            const InvariantSubspace w = f_of_tableau(k, t);
            return Outcome{w.space.rank == want,
                           "rank " + std::to_string(w.space.rank) +
                               ", expected " + std::to_string(want)};
          });
        }
      }
      run(rep, "completeness n=" + std::to_string(n) + " " + k.describe(), [&] {
        const std::uint64_t d = ipow(k.dim(), n);
        return Outcome{total == d, std::to_string(total) + " vs " +
                                       std::to_string(d)};
      });
    }
    // Without content collisions the consecutive and direct evaluations agree.
    for (const auto& t : tableaux_up_to(std::min(max_n, 3))) {
      run(rep, "direct = consecutive F" + t.to_string() + " " + k.describe(),
          [&] {
            const ContentString c = kernel_contents(k, t);
            return f_operator(k, c) == f_of_tableau(k, t).f;
          });
    }
  }
  return rep;
}

SuiteReport idempotents_suite(const SuiteConfig& cfg) {
  SuiteReport rep{"idempotents", {}};
  const int sym_n = cfg.max_n > 0 ? cfg.max_n : 5;
  const int hecke_n = cfg.max_n > 0 ? std::min(cfg.max_n, 4) : 4;
  for (int n = 1; n <= sym_n; ++n) {
    std::vector<std::pair<StandardTableau, SymGroupElement>> es;
    for (const auto& t : tableaux_of_size(n)) {
      run(rep, "E" + t.to_string() + " idempotent, ideal dim", [&] {
        es.emplace_back(t, e_tableau(t));
        return true;
      });
    }
    if (n > 4 || static_cast<std::size_t>(es.size()) != tableaux_of_size(n).size()) {
      continue;
    }
    run(rep, "sum of E_T is 1, n=" + std::to_string(n), [&] {
      SymGroupElement s(n);
      for (const auto& [t, e] : es) s += e;
      return s == SymGroupElement::identity(n);
    });
    run(rep, "E_T E_T' = 0 for T != T', n=" + std::to_string(n), [&] {
      for (const auto& [t, e] : es) {
        for (const auto& [t2, e2] : es) {
          if (t == t2) continue;
          if (!(e * e2).is_zero()) {
            return Outcome{false, t.to_string() + " " + t2.to_string()};
          }
        }
      }
      return Outcome{true, ""};
    });
  }
  run(rep, "content collision in [[1,2],[3,4]]", [&] {
    const auto t = StandardTableau::from_rows({{1, 2}, {3, 4}});
    const ContentString c = content_string(t);
    bool direct_singular = false;
    try {
      phi_direct(c);
    } catch (const DivisionByZero&) {
      direct_singular = true;
    }
    e_tableau(t);
    return Outcome{direct_singular,
                   direct_singular ? "direct product singular, consecutive ok"
                                   : "direct product unexpectedly regular"};
  });
  for (const auto& q : cfg.qs) {
    for (int n = 1; n <= hecke_n; ++n) {
      HeckeElement sum(n, HeckeRule{q});
      bool all = true;
      for (const auto& t : tableaux_of_size(n)) {
        run(rep, "E" + t.to_string() + " q=" + q.to_display() +
                     " idempotent, ideal dim",
            [&] {
              try {
                sum += e_q_tableau(t, q);
              } catch (...) {
                all = false;
                throw;
              }
              return true;
            });
      }
      if (all) {
        run(rep, "sum of E_T is 1, n=" + std::to_string(n) +
                     " q=" + q.to_display(),
            [&] { return sum == HeckeElement::identity(n, HeckeRule{q}); });
      }
    }
    run(rep, "sigma_1 E = -q^-1 E for the column, q=" + q.to_display(), [&] {
      const HeckeElement e = e_q_tableau(StandardTableau::column(2), q);
      return hecke_generator(2, 1, q) * e == RationalFunction(-q.inverse()) * e;
    });
  }
  return rep;
}

SuiteReport nonstandard_suite(const SuiteConfig& cfg) {
  SuiteReport rep{"nonstandard", {}};
  const std::vector<std::pair<Rational, Rational>> six = {
      {1, 2}, {1, -1}, {-1, 1}, {-1, -2}, {2, 1}, {-2, -1}};
  for (const auto& entry : nonstandard_scan_n3(six)) {
    run(rep,
        "Phi(0," + entry.c2.to_display() + "," + entry.c3.to_display() +
            ") proportional to an idempotent",
        [&] {
          const auto& r = entry.report;
          return Outcome{!entry.singular && r.idempotent_after_scaling &&
                             !r.invertible,
                         "scale " + r.scale.to_display() + ", ideal dim " +
                             std::to_string(r.left_ideal_dim)};
        });
  }
  auto phi = [](int c2, int c3) {
    return phi_consecutive({Rational(0), Rational(c2), Rational(c3)});
  };
  std::vector<SymGroupElement> e;
  run(rep, "E1..E4 built", [&] {
    e = {RationalFunction(Rational(1, 6)) * phi(1, 2),
         RationalFunction(Rational(1, 3)) * phi(2, 1),
         RationalFunction(Rational(1, 3)) * phi(-2, -1),
         RationalFunction(Rational(1, 6)) * phi(-1, -2)};
    return true;
  });
  if (e.size() == 4) {
    run(rep, "E1 + E2 + E3 + E4 = 1", [&] {
      return e[0] + e[1] + e[2] + e[3] == SymGroupElement::identity(3);
    });
    run(rep, "E_i E_j = delta_ij E_i", [&] {
      for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
          const SymGroupElement p = e[i] * e[j];
          if (i == j ? !(p == e[i]) : !p.is_zero()) {
            return Outcome{false, "i=" + std::to_string(i + 1) +
                                      " j=" + std::to_string(j + 1)};
          }
        }
      }
      return Outcome{true, ""};
    });
    run(rep, "E2, E3 generate ideals of dimension 2", [&] {
      return rank(right_regular_matrix(e[1])) == 2 &&
             rank(right_regular_matrix(e[2])) == 2;
    });
  }
  run(rep, "Phi(0,1,5,2) proportional to an idempotent", [&] {
    const IdempotentReport r = idempotent_analysis(phi_consecutive(
        {Rational(0), Rational(1), Rational(5), Rational(2)}));
    return Outcome{r.idempotent_after_scaling && !r.invertible,
                   "scale " + r.scale.to_display() + ", ideal dim " +
                       std::to_string(r.left_ideal_dim)};
  });
  // Off-list pairs with non-integral differences: every factor is invertible.
  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<int> dist(-60, 60);
  std::set<std::pair<Rational, Rational>> seen;
  std::vector<std::pair<Rational, Rational>> sample;
  while (sample.size() < 20) {
    const int a = dist(rng), b = dist(rng);
    if (a % 7 == 0 || b % 11 == 0) continue;
    std::pair<Rational, Rational> p{Rational(a, 7), Rational(b, 11)};
    if (seen.insert(p).second) sample.push_back(p);
  }
  for (const auto& entry : nonstandard_scan_n3(sample)) {
    run(rep,
        "off-list Phi(0," + entry.c2.to_display() + "," +
            entry.c3.to_display() + ") invertible",
        [&] {
          const auto& r = entry.report;
          return Outcome{!entry.singular && r.invertible &&
                             !r.idempotent_after_scaling,
                         "ideal dim " + std::to_string(r.left_ideal_dim)};
        });
  }
  for (const auto& q : cfg.qs) {
    const std::string tag = " q=" + q.to_display();
    run(rep, "Hecke analogues of E2, E3 orthogonal idempotents" + tag, [&] {
      const RationalFunction scale(
          (q * q + Rational(1) + (q * q).inverse()).inverse());
      const HeckeElement tinv = t_longest_inverse(3, q);
      const Rational q2 = q * q;
      const HeckeElement e2 =
          scale * (psi_consecutive(q, {Rational(1), q2 * q2, q2}) * tinv);
      const HeckeElement e3 =
          scale * (psi_consecutive(q, {Rational(1), (q2 * q2).inverse(),
                                       q2.inverse()}) *
                   tinv);
      const bool idem = e2 * e2 == e2 && e3 * e3 == e3;
      const bool orth = (e2 * e3).is_zero() && (e3 * e2).is_zero();
      const bool dims = rank(right_regular_matrix(e2)) == 2 &&
                        rank(right_regular_matrix(e3)) == 2;
      std::string d;
      if (!idem) d += "not idempotent ";
      if (!orth) d += "not orthogonal ";
      if (!dims) d += "ideal dimension ";
      return Outcome{idem && orth && dims, d};
    });
  }
  return rep;
}

SuiteReport orders_suite(const SuiteConfig& cfg) {
  SuiteReport rep{"orders", {}};
  std::mt19937_64 rng(cfg.seed);
  const int max_n = cfg.max_n > 0 ? cfg.max_n : 4;
  const auto kernels = small_kernels(cfg);
  for (const auto& k : kernels) {
    const std::string tag = " " + k.describe();
    for (std::size_t n = 1; n <= 3; ++n) {
      for (std::size_t n1 = 1; n1 <= 3; ++n1) {
        if (n + n1 > 5) continue;
        const ContentString c = random_contents(rng, n);
        const ContentString cbar = random_contents(rng, n1);
        run(rep, "fused orders " + contents_string(c) + " " +
                     contents_string(cbar) + tag,
            [&] {
              return fused_product(k, c, cbar, FusedOrder::Defining) ==
                     fused_product(k, c, cbar, FusedOrder::Alternative);
            });
      }
    }
    for (int n = 2; n <= max_n; ++n) {
      const ContentString c = random_contents(rng, static_cast<std::size_t>(n));
      run(rep, "lex = reverse-lex " + contents_string(c) + tag, [&] {
        return f_operator_ordered(k, c, ProductOrder::Lex) ==
               f_operator_ordered(k, c, ProductOrder::ReverseLex);
      });
      run(rep, "F^ = F P_w " + contents_string(c) + tag, [&] {
        const RationalMatrix f = f_operator_ordered(k, c, ProductOrder::Lex);
        const RationalMatrix fh = f_hat_product(k, c);
        const TensorContext ctx{static_cast<std::size_t>(n), k.dim()};
        return fh == f * longest_element_operator(ctx) && spans_equal(f, fh);
      });
    }
    for (const auto& t : tableaux_up_to(std::min(max_n, 4))) {
      if (t.size() < 2) continue;
      run(rep, "F^(T) = F(T) P_w, same image, T=" + t.to_string() + tag, [&] {
        const ContentString c = kernel_contents(k, t);
        const RationalMatrix f = consecutive_operator(k, c, EvaluationForm::F);
        const RationalMatrix fh =
            consecutive_operator(k, c, EvaluationForm::FHat);
        const TensorContext ctx{static_cast<std::size_t>(t.size()), k.dim()};
        return fh == f * longest_element_operator(ctx) && spans_equal(f, fh);
      });
    }
    for (std::size_t n = 2; n <= 3; ++n) {
      const ContentString c = random_contents(rng, n);
      const ContentString cbar = random_contents(rng, 1);
      for (int kpos = 1; kpos < static_cast<int>(n); ++kpos) {
        const std::string where =
            contents_string(c) + " k=" + std::to_string(kpos) + tag;
        run(rep, "intertwining R " + where,
            [&] { return verify_dep_R(k, c, cbar, kpos); });
        run(rep, "intertwining F " + where,
            [&] { return verify_dep_F(k, c, kpos); });
      }
    }
    for (const auto& t : tableaux_up_to(std::min(max_n, 4))) {
      run(rep, "algebra = matrix path T=" + t.to_string() + tag, [&] {
        const ConsistencyReport r = representation_consistency(k, t);
        return Outcome{r.pass, r.detail};
      });
    }
  }
  if (cfg.kernels.empty()) {
    for (int n = 2; n <= max_n; ++n) {
      const ContentString c = random_contents(rng, static_cast<std::size_t>(n));
      run(rep, "Phi~ = Phi w_n " + contents_string(c), [&] {
        return phi_tilde_direct(c) ==
               phi_direct(c) * SymGroupElement::basis(Permutation::longest(n));
      });
    }
  }
  return rep;
}

SuiteReport golden_suite(const SuiteConfig& cfg) {
  SuiteReport rep{"golden", {}};
  for (const auto& q : cfg.qs) {
    for (const auto& id : example_ids()) {
      const Golden probe = load_golden(cfg.data_dir, id, q);
      if (!probe.q_dependent && q != first_q(cfg)) continue;
      std::string name = id;
      if (probe.q_dependent) name += " q=" + q.to_display();
      run(rep, name, [&] {
        const ReproduceResult r = reproduce(cfg.data_dir, id, q);
        std::ostringstream d;
        if (r.mismatch) {
          d << "entry (" << r.mismatch->row + 1 << "," << r.mismatch->col + 1
            << ") computed " << r.mismatch->computed.to_string("x")
            << " expected " << r.mismatch->expected.to_string("x");
        }
        for (const auto& e : r.golden.errata) {
          d << (d.tellp() > 0 ? "; " : "") << "erratum at (" << e.row << ","
            << e.col << ")";
        }
        if (!r.errata_justified) d << "; an erratum is not justified";
        for (const auto& [what, ok] : r.extra) {
          if (!ok) d << "; failed: " << what;
        }
        return Outcome{r.pass(), d.str()};
      });
    }
  }
  return rep;
}

}  // namespace ybfuse
