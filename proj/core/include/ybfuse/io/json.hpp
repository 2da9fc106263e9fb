#pragma once

#include <nlohmann/json.hpp>

#include <string>

#include "ybfuse/algebra/algebra.hpp"
#include "ybfuse/combinatorics/tableau.hpp"
#include "ybfuse/exact/rational_function.hpp"
#include "ybfuse/linalg/matrix.hpp"

namespace ybfuse {

class ParseError : public Error {
 public:
  using Error::Error;
};

using Json = nlohmann::ordered_json;

// "p/q" in lowest terms.
Json to_json(const Rational& r);
// {"num": [...], "den": [...]}
Json to_json(const RationalFunction& f);
// {"rows": r, "cols": c, "entries": [...]}
Json to_json(const RationalMatrix& m);
Json to_json(const FunctionMatrix& m);
Json to_json(const StandardTableau& t);
// {"n": n, "terms": [{"perm": [images], "coeff": ...}]}
Json to_json(const SymGroupElement& x);
Json to_json(const HeckeElement& x);

Rational rational_from_json(const Json& j);
RationalFunction function_from_json(const Json& j);
FunctionMatrix function_matrix_from_json(const Json& j);
// Accepts the matrix object or a plain list of rows of rationals.
RationalMatrix rational_matrix_from_json(const Json& j);

// Tableau text format: list of rows, "[[1,3],[2]]".
StandardTableau parse_tableau(const std::string& text);
StandardTableau tableau_from_json(const Json& j);

}  // namespace ybfuse
