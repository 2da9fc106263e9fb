#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ybfuse/algebra/algebra.hpp"
#include "ybfuse/fusion/fusion.hpp"
#include "ybfuse/linalg/elimination.hpp"
#include "ybfuse/io/json.hpp"
#include "ybfuse/io/pretty.hpp"
#include "ybfuse/verify/reproduce.hpp"
#include "ybfuse/verify/suites.hpp"

namespace ybfuse::cli {

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

enum class Emit { Json, Pretty };

struct KernelFlags {
  std::string kind = "yang";
  int N = 2;
  int M = 0;
};

struct Options {
  std::string emit;
  std::string output;
  std::string q = "2";
  bool q_given = false;
  std::optional<std::size_t> grid;
  std::uint64_t seed = 20240601;
  bool timing = false;
  KernelFlags kernel;
  bool kind_given = false;
  int max_n = 0;
  std::string tableau;
  std::string tableau2;
  std::string basis;
  std::string suite;
  std::string example;
  std::string group = "sym";
  std::optional<int> n;
  std::string pairs;
};

Emit emit_format(const Options& o) {
  std::string f = o.emit;
  if (f.empty()) {
    const char* env = std::getenv("YBFUSE_EMIT");
    f = (env && *env) ? env : "pretty";
  }
  if (f == "json") return Emit::Json;
  if (f == "pretty") return Emit::Pretty;
  throw UsageError("emit format must be json or pretty, got '" + f + "'");
}

std::filesystem::path data_dir() {
  if (const char* env = std::getenv("YBFUSE_DATA_DIR")) return env;
  return YBFUSE_DEFAULT_DATA_DIR;
}

Rational parse_q(const Options& o) {
  Rational q;
  try {
    q = Rational::parse(o.q);
  } catch (const Error& e) {
    throw UsageError("invalid --q '" + o.q + "': " + e.what());
  }
  check_deformation_parameter(q);
  return q;
}

KernelSpec make_kernel(const Options& o) {
  const KernelKind kind = parse_kernel_kind(o.kernel.kind);
  std::optional<Rational> q;
  if (kind == KernelKind::Hecke || kind == KernelKind::SuperHecke) {
    q = parse_q(o);
  }
  return KernelSpec(kind, o.kernel.N, o.kernel.M, q);
}

Json kernel_json(const KernelSpec& k) {
  Json j{{"kind", kernel_kind_name(k.kind())}, {"N", k.N()}, {"M", k.M()}};
  if (k.is_hecke()) j["q"] = to_json(k.q());
  return j;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Json read_json_file(const std::string& path) {
  try {
    return Json::parse(read_file(path));
  } catch (const Json::exception& e) {
    throw UsageError("'" + path + "' is not valid JSON: " + e.what());
  }
}

StandardTableau tableau_flag(const std::string& text, const char* flag) {
  try {
    return parse_tableau(text);
  } catch (const Error& e) {
    throw UsageError(std::string("invalid ") + flag + ": " + e.what());
  }
}

void dump(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

int cmd_kernel(const Options& o, std::ostream& out) {
  const KernelSpec k = make_kernel(o);
  const FunctionMatrix r = r_matrix(k);
  if (emit_format(o) == Emit::Json) {
    dump(out, Json{{"kernel", kernel_json(k)},
                   {"variable", k.variable_name()},
                   {"matrix", to_json(r)}});
  } else {
    out << "R(" << k.variable_name() << ") for " << k.describe() << "\n"
        << pretty(r, k.variable_name());
  }
  return kOk;
}

// {"left": matrix, "right": matrix}; columns are basis vectors.
BasisPair basis_file(const std::string& path) {
  const Json j = read_json_file(path);
  if (!j.is_object() || !j.contains("left") || !j.contains("right")) {
    throw UsageError("basis file needs \"left\" and \"right\" matrices");
  }
  return {rational_matrix_from_json(j.at("left")),
          rational_matrix_from_json(j.at("right"))};
}

int cmd_fuse(const Options& o, std::ostream& out) {
  const KernelSpec k = make_kernel(o);
  const StandardTableau t = tableau_flag(o.tableau, "--tableau");
  const StandardTableau t2 = tableau_flag(o.tableau2, "--tableau2");
  for (const auto* tab : {&t, &t2}) {
    if (expected_rank(k, tab->shape()) == 0) {
      throw UsageError("shape of " + tab->to_string() +
                       " has no invariant subspace for " + k.describe());
    }
  }
  std::optional<BasisPair> bases;
  if (!o.basis.empty()) bases = basis_file(o.basis);
  FunctionMatrix m;
  try {
    m = restrict_fused(k, t, t2, bases);
  } catch (const SubspaceNotInvariant& e) {
    throw UsageError(std::string("--basis: ") + e.what());
  } catch (const DegenerateBasis& e) {
    throw UsageError(std::string("--basis: ") + e.what());
  }
  if (emit_format(o) == Emit::Json) {
    dump(out, Json{{"kernel", kernel_json(k)},
                   {"tableau", to_json(t)},
                   {"tableau2", to_json(t2)},
                   {"basis", bases ? "explicit" : "pivot-columns"},
                   {"variable", k.variable_name()},
                   {"matrix", to_json(m)}});
  } else {
    out << "R restricted to W" << t.to_string() << " (x) W" << t2.to_string()
        << " for " << k.describe() << "\n"
        << pretty(m, k.variable_name());
  }
  return kOk;
}

SuiteConfig suite_config(const Options& o) {
  SuiteConfig cfg;
  if (o.kind_given) cfg.kernels.push_back(make_kernel(o));
  if (o.q_given) cfg.qs = {parse_q(o)};
  cfg.grid = o.grid;
  cfg.seed = o.seed;
  cfg.max_n = o.max_n;
  cfg.data_dir = data_dir();
  return cfg;
}

std::vector<std::string> expand_suite(const std::string& name) {
  if (name == "all") return suite_names();
  if (name == "ybe") return {"base-ybe", "fused-ybe"};
  const auto names = suite_names();
  if (std::find(names.begin(), names.end(), name) == names.end()) {
    std::string known;
    for (const auto& n : names) known += " " + n;
    throw UsageError("unknown suite '" + name + "'; known: ybe all" + known);
  }
  return {name};
}

int cmd_verify(const Options& o, std::ostream& out) {
  const std::vector<std::string> names = expand_suite(o.suite);
  const SuiteConfig cfg = suite_config(o);
  const Emit emit = emit_format(o);
  bool all_pass = true;
  Json reports = Json::array();
  for (const auto& name : names) {
    const SuiteReport rep = run_suite(name, cfg);
    all_pass = all_pass && rep.pass();
    if (emit == Emit::Json) {
      Json checks = Json::array();
      for (const auto& c : rep.checks) {
        Json cj{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}};
        if (o.timing) cj["seconds"] = c.seconds;
        checks.push_back(std::move(cj));
      }
      reports.push_back(Json{{"suite", rep.suite},
                             {"pass", rep.pass()},
                             {"checks", rep.checks.size()},
                             {"failures", rep.failures()},
                             {"results", checks}});
      continue;
    }
    double total = 0;
    for (const auto& c : rep.checks) {
      total += c.seconds;
      out << (c.pass ? "PASS " : "FAIL ") << c.name;
      if (!c.detail.empty()) out << "  [" << c.detail << "]";
      if (o.timing) {
        std::ostringstream s;
        s.setf(std::ios::fixed);
        s.precision(3);
        s << c.seconds;
        out << "  " << s.str() << "s";
      }
      out << "\n";
    }
    out << rep.suite << ": " << rep.checks.size() << " checks, "
        << rep.failures() << " failed";
    if (o.timing) {
      std::ostringstream s;
      s.setf(std::ios::fixed);
      s.precision(3);
      s << total;
      out << ", " << s.str() << "s";
    }
    out << "\n";
  }
  if (emit == Emit::Json) {
    dump(out, Json{{"pass", all_pass}, {"suites", reports}});
  }
  return all_pass ? kOk : kFailed;
}

int cmd_reproduce(const Options& o, std::ostream& out) {
  const Rational q = parse_q(o);
  ReproduceResult r;
  try {
    r = reproduce(data_dir(), o.example, q);
  } catch (const UnknownExample& e) {
    std::string known;
    for (const auto& id : example_ids()) known += " " + id;
    throw UsageError(std::string(e.what()) + "; known:" + known);
  }
  const std::string& var = r.golden.variable;
  if (emit_format(o) == Emit::Json) {
    Json j{{"id", r.id}, {"match", r.pass()}};
    if (r.golden.q_dependent) j["q"] = to_json(q);
    j["variable"] = var;
    j["basis"] = r.golden.basis;
    if (r.golden.prefactor != RationalFunction(1)) {
      j["prefactor"] = to_json(r.golden.prefactor);
    }
    j["matrix"] = to_json(r.computed);
    if (r.mismatch) {
      j["mismatch"] = Json{{"row", r.mismatch->row + 1},
                           {"col", r.mismatch->col + 1},
                           {"computed", to_json(r.mismatch->computed)},
                           {"expected", to_json(r.mismatch->expected)}};
    }
    Json errata = Json::array();
    for (const auto& e : r.golden.errata) {
      errata.push_back(Json{{"row", e.row},
                            {"col", e.col},
                            {"printed", e.printed_text},
                            {"corrected", e.corrected_text},
                            {"justified", r.errata_justified}});
    }
    j["errata"] = errata;
    Json extra = Json::array();
    for (const auto& [what, ok] : r.extra) {
      extra.push_back(Json{{"check", what}, {"pass", ok}});
    }
    j["extra"] = extra;
    dump(out, j);
  } else {
    out << r.id;
    if (r.golden.q_dependent) out << " at q = " << q.to_display();
    out << " (" << r.golden.basis << ")\n";
    if (r.golden.prefactor != RationalFunction(1)) {
      out << "entries include the prefactor " << pretty(r.golden.prefactor, var)
          << "\n";
    }
    out << pretty(r.computed, var);
    for (const auto& e : r.golden.errata) {
      out << "erratum (" << e.row << "," << e.col << "): printed "
          << e.printed_text << ", corrected " << e.corrected_text
          << (r.errata_justified ? "" : " [not justified]") << "\n";
    }
    for (const auto& [what, ok] : r.extra) {
      out << (ok ? "PASS " : "FAIL ") << what << "\n";
    }
    if (r.mismatch) {
      out << "first mismatch at (" << r.mismatch->row + 1 << ","
          << r.mismatch->col + 1 << "): computed "
          << pretty(r.mismatch->computed, var) << ", expected "
          << pretty(r.mismatch->expected, var) << "\n";
    }
    out << (r.pass() ? "MATCH" : "MISMATCH") << "\n";
  }
  return r.pass() ? kOk : kFailed;
}

Json report_json(const IdempotentReport& r) {
  return Json{{"scale", to_json(r.scale)},
              {"idempotent", r.idempotent_after_scaling},
              {"invertible", r.invertible},
              {"ideal_dim", r.left_ideal_dim}};
}

void report_pretty(std::ostream& out, const IdempotentReport& r) {
  out << "scale " << r.scale.to_display() << ", "
      << (r.idempotent_after_scaling ? "idempotent" : "not idempotent")
      << " after scaling, " << (r.invertible ? "invertible" : "not invertible")
      << ", ideal dim " << r.left_ideal_dim << "\n";
}

int cmd_idempotent(const Options& o, std::ostream& out) {
  const StandardTableau t = tableau_flag(o.tableau, "--tableau");
  if (o.n && *o.n != t.size()) {
    throw UsageError("--n " + std::to_string(*o.n) + " does not match " +
                     t.to_string());
  }
  Json candidate{{"group", o.group}, {"tableau", to_json(t)}};
  Json element;
  std::string text;
  IdempotentReport rep;
  if (o.group == "sym") {
    const SymGroupElement e = e_tableau(t);
    element = to_json(e);
    text = to_string(e);
    rep = idempotent_analysis(e);
  } else if (o.group == "hecke") {
    const Rational q = parse_q(o);
    candidate["q"] = to_json(q);
    const HeckeElement e = e_q_tableau(t, q);
    element = to_json(e);
    text = to_string(e);
    rep = idempotent_analysis(e);
  } else {
    throw UsageError("--group must be sym or hecke");
  }
  if (emit_format(o) == Emit::Json) {
    Json j{{"candidate", candidate}, {"element", element}};
    const Json fields = report_json(rep);
    for (const auto& [key, value] : fields.items()) j[key] = value;
    dump(out, j);
  } else {
    out << "E" << t.to_string() << " = " << text << "\n";
    report_pretty(out, rep);
  }
  return kOk;
}

std::vector<std::pair<Rational, Rational>> read_pairs(const std::string& path) {
  const Json j = read_json_file(path);
  if (!j.is_array()) throw UsageError("pairs file must be a list of [c2, c3]");
  std::vector<std::pair<Rational, Rational>> out;
  for (const auto& p : j) {
    if (!p.is_array() || p.size() != 2) {
      throw UsageError("each pair must be a list [c2, c3]");
    }
    try {
      out.emplace_back(rational_from_json(p[0]), rational_from_json(p[1]));
    } catch (const Error& e) {
      throw UsageError(std::string("bad pair: ") + e.what());
    }
  }
  return out;
}

int cmd_scan(const Options& o, std::ostream& out) {
  if (o.n.value_or(3) != 3) throw UsageError("scan supports --n 3 only");
  std::vector<std::pair<Rational, Rational>> pairs;
  if (o.pairs.empty()) {
    pairs = {{1, 2}, {1, -1}, {-1, 1}, {-1, -2}, {2, 1}, {-2, -1}};
  } else {
    pairs = read_pairs(o.pairs);
  }
  const auto entries = nonstandard_scan_n3(pairs);
  if (emit_format(o) == Emit::Json) {
    Json list = Json::array();
    for (const auto& e : entries) {
      Json j{{"candidate", Json::array({to_json(Rational(0)), to_json(e.c2),
                                        to_json(e.c3)})},
             {"singular", e.singular}};
      if (!e.singular) {
        const Json fields = report_json(e.report);
        for (const auto& [key, value] : fields.items()) j[key] = value;
      }
      list.push_back(std::move(j));
    }
    dump(out, list);
  } else {
    for (const auto& e : entries) {
      out << "Phi(0," << e.c2.to_display() << "," << e.c3.to_display()
          << "): ";
      if (e.singular) {
        out << "singular\n";
      } else {
        report_pretty(out, e.report);
      }
    }
  }
  return kOk;
}

void add_kernel_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--kind,--kernel", o.kernel.kind,
                  "yang, super-yang, hecke or super-hecke")
      ->check(CLI::IsMember({"yang", "super-yang", "hecke", "super-hecke"}));
  cmd->add_option("--N", o.kernel.N, "even dimension")->check(CLI::NonNegativeNumber);
  cmd->add_option("--M", o.kernel.M, "odd dimension")->check(CLI::NonNegativeNumber);
}

void add_q_flag(CLI::App* cmd, Options& o) {
  cmd->add_option("--q", o.q, "deformation parameter, a rational not 0 or +-1");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  Options o;
  CLI::App app{"Exact fused R-matrices, invariant subspaces and idempotents",
               "ybfuse"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--emit", o.emit, "json or pretty (default: $YBFUSE_EMIT, else pretty)");
  app.add_option("-o,--output", o.output, "write the result to a file");

  auto* kernel = app.add_subcommand("kernel", "emit a base R-matrix");
  add_kernel_flags(kernel, o);
  add_q_flag(kernel, o);

  auto* fuse = app.add_subcommand("fuse", "emit a fused matrix restricted to W_T (x) W_T2");
  add_kernel_flags(fuse, o);
  add_q_flag(fuse, o);
  fuse->add_option("--tableau", o.tableau, "e.g. '[[1,2]]'")->required();
  fuse->add_option("--tableau2", o.tableau2, "e.g. '[[1,2]]'")->required();
  fuse->add_option("--basis", o.basis, "JSON file {\"left\": M, \"right\": M}");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", o.suite, "suite name, ybe or all")->required();
  add_kernel_flags(verify, o);
  add_q_flag(verify, o);
  verify->add_option("--grid", o.grid, "degree bound override");
  verify->add_option("--seed", o.seed, "seed for sampled cases");
  verify->add_option("--max-n", o.max_n, "largest tableau size");
  verify->add_flag("--timing", o.timing, "report seconds per check");

  auto* repro = app.add_subcommand("reproduce", "recompute a worked example and compare");
  repro->add_option("id", o.example, "example id")->required();
  add_q_flag(repro, o);

  auto* idem = app.add_subcommand("idempotent", "primitive idempotent of a tableau");
  idem->add_option("--group", o.group, "sym or hecke");
  idem->add_option("--n", o.n, "size of the tableau");
  idem->add_option("--tableau", o.tableau, "e.g. '[[1,2],[3]]'")->required();
  add_q_flag(idem, o);

  auto* scan = app.add_subcommand("scan", "analyse Phi(0,c2,c3) for candidate pairs");
  scan->add_option("--n", o.n, "must be 3");
  scan->add_option("--pairs", o.pairs, "JSON file [[c2, c3], ...]");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  for (auto* cmd : {kernel, fuse, verify}) {
    if (cmd->parsed()) {
      o.kind_given = cmd->count("--kind") > 0;
      o.q_given = cmd->count("--q") > 0;
    }
  }
  if (idem->parsed() || repro->parsed()) o.q_given = true;

  std::ostringstream buffer;
  int code = kOk;
  try {
    emit_format(o);
    if (kernel->parsed()) code = cmd_kernel(o, buffer);
    else if (fuse->parsed()) code = cmd_fuse(o, buffer);
    else if (verify->parsed()) code = cmd_verify(o, buffer);
    else if (repro->parsed()) code = cmd_reproduce(o, buffer);
    else if (idem->parsed()) code = cmd_idempotent(o, buffer);
    else if (scan->parsed()) code = cmd_scan(o, buffer);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidTableau& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidDeformationParameter& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }

  if (o.output.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(o.output);
    if (!file) {
      err << "error: cannot write '" << o.output << "'\n";
      return kUsage;
    }
    file << buffer.str();
  }
  return code;
}

}  // namespace ybfuse::cli
