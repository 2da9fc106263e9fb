#include "ybfuse/io/json.hpp"

namespace ybfuse {

namespace {

Json coefficient_list(const Polynomial& p) {
  Json out = Json::array();
  for (const auto& c : p.coefficients()) out.push_back(c.to_string());
  return out;
}

Polynomial polynomial_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("coefficient list expected");
  std::vector<Rational> cs;
  for (const auto& c : j) cs.push_back(rational_from_json(c));
  return Polynomial(std::move(cs));
}

template <class S>
Json matrix_json(const Matrix<S>& m) {
  Json entries = Json::array();
  for (const auto& e : m.entries()) entries.push_back(to_json(e));
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

template <class Element>
Json element_json(const Element& x) {
  Json terms = Json::array();
  for (const auto& [w, c] : x.terms()) {
    terms.push_back(Json{{"perm", w.images()}, {"coeff", to_json(c)}});
  }
  return Json{{"n", x.n()}, {"terms", terms}};
}

}  // namespace

Json to_json(const Rational& r) { return r.to_string(); }

Json to_json(const RationalFunction& f) {
  return Json{{"num", coefficient_list(f.numerator())},
              {"den", coefficient_list(f.denominator())}};
}

Json to_json(const RationalMatrix& m) { return matrix_json(m); }
Json to_json(const FunctionMatrix& m) { return matrix_json(m); }

Json to_json(const StandardTableau& t) { return t.rows(); }

Json to_json(const SymGroupElement& x) { return element_json(x); }

Json to_json(const HeckeElement& x) {
  Json j = element_json(x);
  j["q"] = x.rule().q.to_string();
  return j;
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ParseError("rational must be a string \"p/q\" or an integer");
}

RationalFunction function_from_json(const Json& j) {
  if (j.is_object()) {
    if (!j.contains("num") || !j.contains("den")) {
      throw ParseError("rational function needs \"num\" and \"den\"");
    }
    return RationalFunction::normalize(polynomial_from_json(j.at("num")),
                                       polynomial_from_json(j.at("den")));
  }
  return RationalFunction(rational_from_json(j));
}

FunctionMatrix function_matrix_from_json(const Json& j) {
  const auto rows = j.at("rows").get<std::size_t>();
  const auto cols = j.at("cols").get<std::size_t>();
  std::vector<RationalFunction> data;
  for (const auto& e : j.at("entries")) data.push_back(function_from_json(e));
  return FunctionMatrix(rows, cols, std::move(data));
}

RationalMatrix rational_matrix_from_json(const Json& j) {
  if (j.is_object()) {
    const auto rows = j.at("rows").get<std::size_t>();
    const auto cols = j.at("cols").get<std::size_t>();
    std::vector<Rational> data;
    for (const auto& e : j.at("entries")) data.push_back(rational_from_json(e));
    return RationalMatrix(rows, cols, std::move(data));
  }
  if (!j.is_array() || j.empty()) throw ParseError("matrix expected");
  const std::size_t cols = j.front().size();
  std::vector<Rational> data;
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != cols) throw ParseError("ragged matrix");
    for (const auto& e : row) data.push_back(rational_from_json(e));
  }
  return RationalMatrix(j.size(), cols, std::move(data));
}

StandardTableau tableau_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("tableau must be a list of rows");
  std::vector<std::vector<int>> rows;
  for (const auto& row : j) {
    if (!row.is_array()) throw ParseError("tableau row must be a list");
    std::vector<int> r;
    for (const auto& e : row) {
      if (!e.is_number_integer()) throw ParseError("tableau entries are integers");
      r.push_back(e.get<int>());
    }
    rows.push_back(std::move(r));
  }
  return StandardTableau::from_rows(std::move(rows));
}

StandardTableau parse_tableau(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("invalid tableau JSON: " + text);
  }
  return tableau_from_json(j);
}

}  // namespace ybfuse
