#include <random>

#include <gtest/gtest.h>

#include "arrcd/rational_linalg.hpp"

namespace arrcd {
namespace {

IntegerMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<int> entry(-6, 6);
  IntegerMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = entry(rng);
  }
  return m;
}

TEST(RationalLinalg, RowReduceAndSolve) {
  RationalMatrix a(2, 3);
  a(0, 0) = 1;
  a(0, 1) = 2;
  a(1, 0) = 2;
  a(1, 1) = 4;
  a(1, 2) = 1;
  const Echelon e = row_reduce(a);
  EXPECT_EQ(e.rank(), 2U);
  EXPECT_EQ(e.pivots, (std::vector<std::size_t>{0, 2}));
  const auto x = particular_solution(a, {Rational(3), Rational(7)});
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(multiply(a, *x), (std::vector<Rational>{3, 7}));

  RationalMatrix dependent(2, 1);
  dependent(0, 0) = 1;
  dependent(1, 0) = 2;
  EXPECT_FALSE(particular_solution(dependent, {Rational(1), Rational(3)}).has_value());
}

TEST(RationalLinalg, SmithFormInvariants) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 1 + rng() % 4;
    const std::size_t cols = 1 + rng() % 4;
    const IntegerMatrix m = random_matrix(rng, rows, cols);
    const SmithForm s = smith_normal_form(m);
    ASSERT_EQ(s.left * m * s.right, s.diagonal);
    ASSERT_EQ(s.right * s.right_inverse, IntegerMatrix::identity(cols));
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        if (i != j) ASSERT_EQ(s.diagonal(i, j), 0);
      }
    }
    for (std::size_t i = 0; i < s.rank; ++i) {
      ASSERT_GT(s.diagonal(i, i), 0);
      if (i + 1 < s.rank) ASSERT_TRUE(mpz_divisible_p(s.diagonal(i + 1, i + 1).get_mpz_t(), s.diagonal(i, i).get_mpz_t()));
    }
    for (std::size_t i = s.rank; i < std::min(rows, cols); ++i) ASSERT_EQ(s.diagonal(i, i), 0);
    ASSERT_EQ(s.rank, row_reduce(to_rational(m)).rank());
  }
}

TEST(RationalLinalg, HermiteFormIsCanonical) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 100; ++trial) {
    const IntegerMatrix m = random_matrix(rng, 3, 4);
    const IntegerMatrix h = hermite_normal_form(m);
    // Unimodular row operations leave the Hermite form unchanged.
    IntegerMatrix shuffled = m;
    shuffled.swap_rows(0, 2);
    shuffled.add_row_multiple(1, 0, Integer(3));
    shuffled.add_row_multiple(2, 1, Integer(-2));
    ASSERT_EQ(hermite_normal_form(shuffled), h);
  }
}

TEST(RationalLinalg, SaturatedBasis) {
  IntegerMatrix m(1, 2);
  m(0, 0) = 2;
  m(0, 1) = 4;
  const IntegerMatrix s = saturated_row_basis(m);
  ASSERT_EQ(s.rows(), 1U);
  EXPECT_EQ(s(0, 0), 1);
  EXPECT_EQ(s(0, 1), 2);

  IntegerMatrix lattice(2, 2);
  lattice(0, 0) = 2;
  lattice(1, 1) = 2;
  EXPECT_EQ(saturated_row_basis(lattice), IntegerMatrix::identity(2));
}

TEST(RationalLinalg, ClearDenominators) {
  RationalMatrix m(1, 3);
  m(0, 0) = Rational(1, 2);
  m(0, 1) = Rational(2, 3);
  m(0, 2) = 1;
  const IntegerMatrix c = clear_denominators(m);
  EXPECT_EQ(c(0, 0), 3);
  EXPECT_EQ(c(0, 1), 4);
  EXPECT_EQ(c(0, 2), 6);
}

TEST(RationalLinalg, ParseAndFractionalPart) {
  EXPECT_EQ(parse_rational("-3/6"), Rational(-1, 2));
  EXPECT_EQ(parse_rational("+7"), Rational(7));
  EXPECT_EQ(parse_rational("123456789012345678901234567890"), Rational(Integer("123456789012345678901234567890")));
  EXPECT_THROW(parse_rational("1.5"), ParseError);
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("1/-2"), ParseError);
  EXPECT_THROW(parse_rational(""), ParseError);
  EXPECT_EQ(fractional_part(Rational(-1, 3)), Rational(2, 3));
  EXPECT_EQ(fractional_part(Rational(7, 2)), Rational(1, 2));
  EXPECT_EQ(fractional_part(Rational(-2)), Rational(0));
}

}  // namespace
}  // namespace arrcd
