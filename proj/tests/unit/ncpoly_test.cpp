#include <random>

#include <gtest/gtest.h>

#include "arrcd/ncpoly.hpp"
#include "oracles.hpp"

namespace arrcd {
namespace {

AbPolynomial ab(const char* text) { return parse_ab(text); }
CdPolynomial cd(const char* text) { return parse_cd(text); }

TEST(NcPoly, RendersCanonically) {
  EXPECT_EQ(to_string(cd("c^3 + 2*d*c")), "c^3 + 2*d*c");
  EXPECT_EQ(to_string(ab("aa - ab")), "a*a - a*b");
  EXPECT_EQ(to_string(AbPolynomial()), "0");
  EXPECT_EQ(to_string(AbPolynomial::one()), "1");
  EXPECT_EQ(to_string(ab("-b")), "-b");
  EXPECT_EQ(to_string(cd("2*c*d - d*c + 5")), "5 + 2*c*d - d*c");
}

TEST(NcPoly, ParserAcceptsOptionalStarsAndPowers) {
  EXPECT_EQ(ab("2ab^2a"), ab("2*a*b*b*a"));
  EXPECT_EQ(ab("a^3"), AbPolynomial::word("aaa"));
  EXPECT_EQ(ab("ab - ab"), AbPolynomial());
  EXPECT_EQ(cd("c^2d"), CdPolynomial::word("ccd"));
  EXPECT_THROW(ab("a + c"), ParseError);
  EXPECT_THROW(ab("2**a"), ParseError);
  EXPECT_THROW(cd("c^"), ParseError);
}

TEST(NcPoly, RenderParseRoundTrip) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const AbPolynomial p = testing::random_ab_polynomial(rng, 6);
    EXPECT_EQ(parse_ab(to_string(p)), p) << to_string(p);
  }
}

TEST(NcPoly, DegreesAndHomogeneity) {
  const CdPolynomial p = cd("c^3 + d*c + 4");
  EXPECT_FALSE(p.is_homogeneous());
  EXPECT_EQ(p.degrees(), (std::vector<int>{0, 3}));
  EXPECT_TRUE(p.homogeneous_part(3).is_homogeneous());
  EXPECT_EQ(p.homogeneous_part(3), cd("c^3 + d*c"));
}

TEST(NcPoly, ProductIsConcatenation) {
  EXPECT_EQ(ab("a + b") * ab("a - b"), ab("aa - ab + ba - bb"));
  EXPECT_EQ(ab("a - b").pow(3), a_minus_b_power(3));
  EXPECT_EQ(a_minus_b_power(0), AbPolynomial::one());
}

TEST(NcPoly, StarReversesWords) {
  EXPECT_EQ(ab("aab + 3*ba").star(), ab("baa + 3*ab"));
  EXPECT_EQ(cd("d*c^2").star(), cd("c^2*d"));
}

TEST(NcPoly, ExpandAndCollapseAreInverse) {
  EXPECT_EQ(expand_cd(cd("d")), ab("ab + ba"));
  EXPECT_EQ(expand_cd(cd("c")), ab("a + b"));
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> coefficient(-4, 4);
  for (int i = 0; i < 100; ++i) {
    CdPolynomial p;
    for (int t = 0; t < 4; ++t) {
      std::string letters;
      for (int k = 0; k < 4; ++k) letters += "cdd"[rng() % 3];
      p.add_term(CdWord(letters), coefficient(rng));
    }
    EXPECT_EQ(collapse_to_cd(expand_cd(p)), p);
  }
}

TEST(NcPoly, CollapseRejectsNonCdElements) {
  EXPECT_THROW(collapse_to_cd(ab("a")), NotInCdAlgebra);
  EXPECT_THROW(collapse_to_cd(ab("ab")), NotInCdAlgebra);
  EXPECT_THROW(collapse_to_cd(ab("aa")), NotInCdAlgebra);
  EXPECT_EQ(collapse_to_cd(ab("aa + ab + ba + bb")), cd("c^2"));
}

TEST(NcPoly, CoproductDropsOneLetter) {
  TensorAbPolynomial expected;
  expected.add_term(AbWord(""), AbWord("ba"), 1);
  expected.add_term(AbWord("a"), AbWord("a"), 1);
  expected.add_term(AbWord("ab"), AbWord(""), 1);
  EXPECT_EQ(coproduct(ab("aba")), expected);
  EXPECT_TRUE(coproduct(AbPolynomial::one()).is_zero());
  EXPECT_EQ(to_string(coproduct(ab("aba"))), "(1 | b*a) + (a | a) + (a*b | 1)");
}

TEST(NcPoly, ExactDivision) {
  EXPECT_EQ(cd("4*d + 2*c^2").divided_exactly(2), cd("2*d + c^2"));
  EXPECT_THROW(cd("3*d").divided_exactly(2), OddCoefficient);
}

TEST(NcPoly, BigCoefficientsStayExact) {
  const AbPolynomial p = ab("123456789*a + 987654321*b").pow(10);
  EXPECT_EQ(p.terms().size(), 1024U);
  Integer corner;
  mpz_ui_pow_ui(corner.get_mpz_t(), 123456789, 10);
  EXPECT_EQ(p.coefficient(AbWord(std::string(10, 'a'))), corner);
  Integer sum = 0;
  for (const auto& [w, c] : p.terms()) sum += c;
  Integer expected;
  mpz_ui_pow_ui(expected.get_mpz_t(), 123456789 + 987654321, 10);
  EXPECT_EQ(sum, expected);
}

}  // namespace
}  // namespace arrcd
