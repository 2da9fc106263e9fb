#pragma once

#include <string>
#include <string_view>

#include "ybfuse/exact/rational_function.hpp"

namespace ybfuse {

// Rational-function expressions in one variable with a numeric q.
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' '-'? integer)?
//   primary := number | name | name '(' expr ')' | '(' expr ')'
//
// Names: u, a, alpha (the variable), q. Functions: br(n) = [n],
// al(n) = (q^n a - q^-n)/(q - q^-1), P(x) the quadratic
// (q^-1 x^2 + (q^3 - 2q - 2q^-1 + q^-3) x + q)/(q - q^-1)^2.
struct ExpressionEnv {
  Rational q{2};
};

RationalFunction parse_expression(std::string_view text,
                                  const ExpressionEnv& env = {});

}  // namespace ybfuse
