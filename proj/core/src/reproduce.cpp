#include "ybfuse/verify/reproduce.hpp"

#include <algorithm>
#include <fstream>

#include "ybfuse/fusion/fusion.hpp"
#include "ybfuse/io/expression.hpp"
#include "ybfuse/io/json.hpp"

namespace ybfuse {

namespace {

// Column vectors on V^{(x)n}, d = 2, given as {digits, coefficient} lists.
using Vector = std::vector<std::pair<std::vector<int>, Rational>>;

RationalMatrix columns(std::size_t sites, const std::vector<Vector>& cols) {
  const TensorContext ctx{sites, 2};
  RationalMatrix b(ctx.dimension(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    for (const auto& [digits, c] : cols[j]) {
      std::size_t index = 0;
      for (int x : digits) index = index * 2 + static_cast<std::size_t>(x - 1);
      b(index, j) += c;
    }
  }
  return b;
}

RationalMatrix square_basis(const Rational& q) {
  return columns(2, {{{{1, 1}, Rational(1)}},
                     {{{1, 2}, Rational(1)}, {{2, 1}, q}},
                     {{{2, 2}, Rational(1)}}});
}

RationalMatrix hook_basis() {
  return columns(3, {{{{1, 2, 1}, Rational(1)}, {{2, 1, 1}, Rational(-1)}},
                     {{{1, 2, 2}, Rational(1)}, {{2, 1, 2}, Rational(-1)}}});
}

RationalMatrix fused_basis() {
  const Rational one(1);
  const Rational minus(-1);
  std::vector<Vector> cols;
  for (int last : {1, 2}) {
    cols.push_back({{{1, 1, last}, one}});
    cols.push_back({{{1, 2, last}, one}, {{2, 1, last}, one}});
    cols.push_back({{{2, 2, last}, one}});
  }
  for (int last : {1, 2}) {
    cols.push_back({{{1, 2, last}, one}, {{2, 1, last}, minus}});
  }
  return columns(3, cols);
}

FunctionMatrix fused_example(const Rational& c2) {
  const KernelSpec k = KernelSpec::yang(2);
  const FusedOperator op =
      fused_operator(k, {Rational(0), c2}, {Rational(0)});
  return restrict_to_subspace(op.matrix, fused_basis());
}

}  // namespace

std::vector<std::string> example_ids() {
  return {"ex-fus1", "ex-fus2", "mat-Sn", "ex-Sn-21a", "ex-Ra", "ex-Ra-s",
          "mat-Hn"};
}

Golden load_golden(const std::filesystem::path& data_dir, const std::string& id,
                   const Rational& q) {
  const auto path = data_dir / "golden" / (id + ".json");
  std::ifstream in(path);
  if (!in) throw Error("cannot read golden file " + path.string());
  const Json j = Json::parse(in);
  Golden g;
  g.id = j.at("id").get<std::string>();
  g.note = j.value("note", "");
  g.basis = j.value("basis", "");
  g.variable = j.value("variable", "u");
  g.q_dependent = j.value("q_dependent", false);
  const ExpressionEnv env{q};
  g.prefactor = parse_expression(j.value("prefactor", "1"), env);
  const auto rows = j.at("rows").get<std::size_t>();
  const auto cols = j.at("cols").get<std::size_t>();
  const Json& entries = j.at("entries");
  if (entries.size() != rows) throw ParseError("golden row count");
  std::vector<RationalFunction> data;
  for (const auto& row : entries) {
    if (row.size() != cols) throw ParseError("golden column count");
    for (const auto& e : row) {
      data.push_back(g.prefactor * parse_expression(e.get<std::string>(), env));
    }
  }
  g.printed = FunctionMatrix(rows, cols, std::move(data));
  g.matrix = g.printed;
  for (const auto& e : j.value("errata", Json::array())) {
    Erratum x;
    x.row = e.at("row").get<std::size_t>();
    x.col = e.at("col").get<std::size_t>();
    if (x.row < 1 || x.row > rows || x.col < 1 || x.col > cols) {
      throw ParseError("erratum position out of range");
    }
    x.printed_text = e.at("printed").get<std::string>();
    x.corrected_text = e.at("corrected").get<std::string>();
    x.printed = g.prefactor * parse_expression(x.printed_text, env);
    x.corrected = g.prefactor * parse_expression(x.corrected_text, env);
    x.reason = e.value("reason", "");
    if (!(g.printed(x.row - 1, x.col - 1) == x.printed)) {
      throw ParseError("erratum does not match the printed entry");
    }
    g.matrix(x.row - 1, x.col - 1) = x.corrected;
    g.errata.push_back(std::move(x));
  }
  return g;
}

FunctionMatrix compute_example(const std::string& id, const Rational& q) {
  if (id == "ex-fus1") return fused_example(Rational(1));
  if (id == "ex-fus2") return fused_example(Rational(-1));
  if (id == "mat-Sn") {
    const RationalMatrix b = square_basis(Rational(1));
    return restrict_fused(KernelSpec::yang(2), StandardTableau::row(2),
                          StandardTableau::row(2), BasisPair{b, b});
  }
  if (id == "ex-Sn-21a") {
    return restrict_fused(KernelSpec::yang(2),
                          StandardTableau::from_rows({{1, 3}, {2}}),
                          StandardTableau::row(1),
                          BasisPair{hook_basis(), RationalMatrix::identity(2)});
  }
  if (id == "ex-Ra") return r_matrix(KernelSpec::hecke(2, q));
  if (id == "ex-Ra-s") return r_matrix(KernelSpec::super_hecke(1, 1, q));
  if (id == "mat-Hn") {
    const RationalMatrix b = square_basis(q);
    return restrict_fused(KernelSpec::hecke(2, q), StandardTableau::row(2),
                          StandardTableau::row(2), BasisPair{b, b});
  }
  throw UnknownExample("unknown example '" + id + "'");
}

std::optional<EntryMismatch> first_mismatch(const FunctionMatrix& computed,
                                            const FunctionMatrix& expected) {
  if (computed.rows() != expected.rows() || computed.cols() != expected.cols()) {
    return EntryMismatch{computed.rows(), computed.cols(), {}, {}};
  }
  for (std::size_t r = 0; r < computed.rows(); ++r) {
    for (std::size_t c = 0; c < computed.cols(); ++c) {
      if (!(computed(r, c) == expected(r, c))) {
        return EntryMismatch{r, c, computed(r, c), expected(r, c)};
      }
    }
  }
  return std::nullopt;
}

bool ReproduceResult::pass() const {
  return match && errata_justified && std::all_of(extra.begin(), extra.end(),
                              [](const auto& e) { return e.second; });
}

ReproduceResult reproduce(const std::filesystem::path& data_dir,
                          const std::string& id, const Rational& q) {
  const auto ids = example_ids();
  if (std::find(ids.begin(), ids.end(), id) == ids.end()) {
    throw UnknownExample("unknown example '" + id + "'");
  }
  ReproduceResult res;
  res.id = id;
  res.golden = load_golden(data_dir, id, q);
  res.computed = compute_example(id, q);
  res.mismatch = first_mismatch(res.computed, res.golden.matrix);
  res.match = !res.mismatch.has_value();
  res.literal_match = !first_mismatch(res.computed, res.golden.printed);
  for (const auto& e : res.golden.errata) {
    const auto& got = res.computed(e.row - 1, e.col - 1);
    if (got == e.printed || !(got == e.corrected)) res.errata_justified = false;
  }
  if (id == "ex-Sn-21a") {
    // Same matrix for the transposed tableau in the basis A g_i (x) e_j.
    const KernelSpec k = KernelSpec::yang(2);
    const auto t = StandardTableau::from_rows({{1, 3}, {2}});
    const RationalMatrix a = conjugation_Ak(k, kernel_contents(k, t), 2);
    const FunctionMatrix moved = restrict_fused(
        k, StandardTableau::from_rows({{1, 2}, {3}}), StandardTableau::row(1),
        BasisPair{a * hook_basis(), RationalMatrix::identity(2)});
    res.extra.emplace_back("transposed tableau in the A-basis",
                           !first_mismatch(moved, res.golden.matrix));
  }
  return res;
}

}  // namespace ybfuse
