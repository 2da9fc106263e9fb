#include <gtest/gtest.h>

#include "test_support.hpp"
#include "ybfuse/io/expression.hpp"
#include "ybfuse/verify/reproduce.hpp"

namespace ybfuse {
namespace {

using testing::t;

const std::filesystem::path kData = YBFUSE_TEST_DATA_DIR;

class GoldenExample : public ::testing::TestWithParam<std::string> {};

TEST_P(GoldenExample, MatchesAtQ2) {
  const ReproduceResult r = reproduce(kData, GetParam(), Rational(2));
  EXPECT_TRUE(r.match);
  EXPECT_TRUE(r.errata_justified);
  EXPECT_FALSE(r.mismatch.has_value());
  for (const auto& [what, ok] : r.extra) EXPECT_TRUE(ok) << what;
  EXPECT_TRUE(r.pass());
}

TEST_P(GoldenExample, MatchesAtQ3Over2) {
  EXPECT_TRUE(reproduce(kData, GetParam(), Rational(3, 2)).pass());
}

INSTANTIATE_TEST_SUITE_P(Examples, GoldenExample, ::testing::ValuesIn(example_ids()),
                         [](const auto& info) {
                           std::string s = info.param;
                           for (auto& ch : s) {
                             if (ch == '-') ch = '_';
                           }
                           return s;
                         });

TEST(GoldenData, SelectedEntries) {
  const Golden fus1 = load_golden(kData, "ex-fus1", Rational(2));
  EXPECT_EQ(fus1.matrix.rows(), 8u);
  EXPECT_EQ(fus1.matrix(0, 0), (t() - 1) / (t() + 1));
  const Golden sn = load_golden(kData, "mat-Sn", Rational(2));
  EXPECT_EQ(sn.matrix.rows(), 9u);
  EXPECT_EQ(sn.matrix(0, 0), (t() - 2) * (t() - 1) / (t() * (t() + 1)));
  const Golden hook = load_golden(kData, "ex-Sn-21a", Rational(2));
  EXPECT_EQ(hook.matrix.rows(), 4u);
  EXPECT_EQ(hook.prefactor, (t() - 2) / (t() - 1));
  const Golden hn = load_golden(kData, "mat-Hn", Rational(2));
  EXPECT_EQ(hn.matrix.rows(), 9u);
  EXPECT_TRUE(hn.q_dependent);
}

TEST(GoldenData, ErratumIsRecordedAndNarrow) {
  const Rational q(2);
  const Golden hn = load_golden(kData, "mat-Hn", q);
  ASSERT_EQ(hn.errata.size(), 1u);
  const Erratum& e = hn.errata.front();
  EXPECT_EQ(e.row, 5u);
  EXPECT_EQ(e.col, 7u);
  // Printed and corrected differ by exactly the factor alpha.
  EXPECT_EQ(e.corrected, e.printed * t());
  // Every other entry is the literal transcription.
  for (std::size_t r = 0; r < 9; ++r) {
    for (std::size_t c = 0; c < 9; ++c) {
      if (r == 4 && c == 6) continue;
      EXPECT_EQ(hn.matrix(r, c), hn.printed(r, c));
    }
  }
  const ReproduceResult res = reproduce(kData, "mat-Hn", q);
  EXPECT_FALSE(res.literal_match);
  EXPECT_EQ(res.computed(4, 6), e.corrected);
  EXPECT_NE(res.computed(4, 6), e.printed);
}

TEST(GoldenData, ErratumAgreesWithClosedForm) {
  // Closed form of the corrected entry: -(q - q^-1) a / (q^2 a - 1).
  for (const Rational& q : {Rational(2), Rational(3, 2), Rational(5)}) {
    const RationalFunction z(q - q.inverse());
    const RationalFunction want =
        -(z * t()) / (RationalFunction(q * q) * t() - 1);
    const ReproduceResult r = reproduce(kData, "mat-Hn", q);
    EXPECT_EQ(r.computed(4, 6), want);
    EXPECT_TRUE(r.pass());
  }
}

TEST(GoldenData, UnknownId) {
  EXPECT_THROW(reproduce(kData, "bogus", Rational(2)), UnknownExample);
}

TEST(GoldenData, FirstMismatch) {
  FunctionMatrix a(2, 2), b(2, 2);
  b(1, 0) = t();
  const auto m = first_mismatch(a, b);
  ASSERT_TRUE(m.has_value());
  EXPECT_EQ(m->row, 1u);
  EXPECT_EQ(m->col, 0u);
  EXPECT_FALSE(first_mismatch(a, a).has_value());
}

}  // namespace
}  // namespace ybfuse
