#include <gtest/gtest.h>

#include "test_support.hpp"
#include "ybfuse/algebra/algebra.hpp"
#include "ybfuse/io/expression.hpp"
#include "ybfuse/io/json.hpp"
#include "ybfuse/io/pretty.hpp"

namespace ybfuse {
namespace {

using testing::t;

TEST(Json, RationalAndFunction) {
  EXPECT_EQ(to_json(Rational(-6, 4)).get<std::string>(), "-3/2");
  EXPECT_EQ(to_json(Rational(2)).get<std::string>(), "2/1");
  const RationalFunction f = (t() - 1) / (t() + 1);
  const Json j = to_json(f);
  EXPECT_EQ(j.dump(), R"({"num":["-1/1","1/1"],"den":["1/1","1/1"]})");
  EXPECT_EQ(function_from_json(j), f);
  EXPECT_EQ(rational_from_json(Json(5)), Rational(5));
  EXPECT_THROW(rational_from_json(Json(1.5)), ParseError);
}

TEST(Json, MatrixRoundTrip) {
  FunctionMatrix m(2, 2);
  m(0, 0) = t();
  m(1, 1) = RationalFunction(1) / (t() - 3);
  m(0, 1) = RationalFunction(Rational(2, 7));
  const Json j = to_json(m);
  EXPECT_EQ(j["rows"], 2);
  EXPECT_EQ(j["entries"].size(), 4u);
  EXPECT_EQ(function_matrix_from_json(j), m);
  const RationalMatrix r = rational_matrix_from_json(Json::parse(R"([["1","1/2"],[0,3]])"));
  EXPECT_EQ(r, (RationalMatrix{{Rational(1), Rational(1, 2)}, {Rational(0), Rational(3)}}));
}

TEST(Json, Tableau) {
  const auto tab = parse_tableau("[[1,3],[2]]");
  EXPECT_EQ(tab, StandardTableau::from_rows({{1, 3}, {2}}));
  EXPECT_EQ(to_json(tab).dump(), "[[1,3],[2]]");
  EXPECT_THROW(parse_tableau("[[1,3],[2]"), ParseError);
  EXPECT_THROW(parse_tableau("[[2,1]]"), InvalidTableau);
  EXPECT_THROW(parse_tableau("{\"rows\":1}"), ParseError);
}

TEST(Json, AlgebraElement) {
  const SymGroupElement e = e_tableau(StandardTableau::row(2));
  const Json j = to_json(e);
  EXPECT_EQ(j["n"], 2);
  ASSERT_EQ(j["terms"].size(), 2u);
  EXPECT_EQ(j["terms"][0]["perm"].dump(), "[1,2]");
  EXPECT_EQ(j["terms"][0]["coeff"]["num"][0], "1/2");
  const Json h = to_json(e_q_tableau(StandardTableau::row(2), Rational(2)));
  EXPECT_EQ(h["q"], "2/1");
}

TEST(Pretty, Display) {
  EXPECT_EQ(pretty((t() - 1) / (t() + 1), "u"), "(u-1)/(u+1)");
  EXPECT_EQ(pretty(RationalFunction(-1) / (t() * (t() + 1)), "u"), "-1/(u^2+u)");
  EXPECT_EQ(pretty(RationalFunction(Rational(3, 4)), "u"), "3/4");
  EXPECT_EQ(pretty(Rational(-2, 3)), "-2/3");
  RationalMatrix m{{Rational(1), Rational(0)}, {Rational(-1, 2), Rational(10)}};
  EXPECT_EQ(pretty(m), "   1   .\n-1/2  10\n");
}

TEST(Expression, Grammar) {
  ExpressionEnv env{Rational(2)};
  EXPECT_EQ(parse_expression("(u-1)/(u+1)", env), (t() - 1) / (t() + 1));
  EXPECT_EQ(parse_expression("-1/(u*(u+1))", env), RationalFunction(-1) / (t() * (t() + 1)));
  EXPECT_EQ(parse_expression("q^-2", env), RationalFunction(Rational(1, 4)));
  EXPECT_EQ(parse_expression("br(2)", env), RationalFunction(Rational(5, 2)));
  EXPECT_EQ(parse_expression("alpha", env), t());
  EXPECT_EQ(parse_expression("a^2 - 3", env), t() * t() - 3);
  // al(n) = (q^n a - q^-n)/(q - q^-1)
  EXPECT_EQ(parse_expression("al(1)", env),
            (RationalFunction(2) * t() - RationalFunction(Rational(1, 2))) /
                RationalFunction(Rational(3, 2)));
  EXPECT_THROW(parse_expression("(u-1", env), ParseError);
  EXPECT_THROW(parse_expression("u +* 2", env), ParseError);
  EXPECT_THROW(parse_expression("v", env), ParseError);
}

TEST(Expression, QuadraticHelper) {
  for (const Rational& q : {Rational(2), Rational(3, 2)}) {
    ExpressionEnv env{q};
    const RationalFunction x = t();
    const RationalFunction qq(q), qi(q.inverse());
    const RationalFunction z = qq - qi;
    const RationalFunction want =
        (qi * x * x + (qq * qq * qq - qq * 2 - qi * 2 + qi * qi * qi) * x + qq) / (z * z);
    EXPECT_EQ(parse_expression("P(a)", env), want);
  }
}

}  // namespace
}  // namespace ybfuse
