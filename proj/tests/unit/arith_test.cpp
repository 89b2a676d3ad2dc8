#include <gtest/gtest.h>

#include <random>

#include "singlattice/arith.hpp"
#include "singlattice/errors.hpp"
#include "singlattice/exact_linalg.hpp"
#include "singlattice/oracle.hpp"

namespace {

using namespace singlattice;

TEST(Arith, FloorDivRoundsTowardNegativeInfinity) {
  EXPECT_EQ(floor_div(7, 2), 3);
  EXPECT_EQ(floor_div(-7, 2), -4);
  EXPECT_EQ(floor_div(7, -2), -4);
  EXPECT_EQ(floor_div(-7, -2), 3);
  EXPECT_EQ(floor_div(-6, 3), -2);
  EXPECT_EQ(ceil_div(-7, 2), -3);
  EXPECT_EQ(ceil_div(7, 2), 4);
  EXPECT_THROW(floor_div(1, 0), PreconditionError);
}

TEST(Arith, RationalFloorCeil) {
  EXPECT_EQ(floor(Rational(-1, 3)), -1);
  EXPECT_EQ(ceil(Rational(-1, 3)), 0);
  EXPECT_EQ(floor(Rational(5)), 5);
}

TEST(Arith, IntegerSquareRoot) {
  for (int n = 0; n < 2000; ++n) {
    const Integer r = isqrt(n);
    EXPECT_LE(r * r, n);
    EXPECT_GT((r + 1) * (r + 1), n);
  }
}

TEST(Arith, ParseAndPrintRoundTrip) {
  Integer v;
  ASSERT_TRUE(parse_integer("-123456789012345678901234567890", v));
  EXPECT_EQ(to_string(v), "-123456789012345678901234567890");
  EXPECT_FALSE(parse_integer("12a", v));
  EXPECT_FALSE(parse_integer("", v));
  EXPECT_EQ(to_string(Rational(-3, 6)), "-1/2");
}

TEST(ExactLinalg, MinorsMatchCofactorExpansion) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> entry(-9, 9);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 6;
    Matrix<Integer> m(n, std::vector<Integer>(n));
    for (auto& row : m) {
      for (auto& x : row) x = entry(rng);
    }
    // Leading minors stop at the first zero, so compare the common prefix.
    const auto fast = leading_principal_minors(m);
    const auto slow = oracle::leading_minors(m);
    ASSERT_LE(fast.size(), slow.size());
    for (std::size_t k = 0; k < fast.size(); ++k) EXPECT_EQ(fast[k], slow[k]) << "k=" << k;
  }
}

TEST(ExactLinalg, SolveAndInverse) {
  const Matrix<Rational> a{{2, 1, 0}, {1, 3, 1}, {0, 1, 4}};
  const std::vector<Rational> b{1, 2, 3};
  const auto x = solve_exact(a, b);
  for (std::size_t i = 0; i < 3; ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < 3; ++j) s += a[i][j] * x[j];
    EXPECT_EQ(s, b[i]);
  }
  const auto inv = inverse_exact(a);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      Rational s = 0;
      for (std::size_t k = 0; k < 3; ++k) s += a[i][k] * inv[k][j];
      EXPECT_EQ(s, i == j ? 1 : 0);
    }
  }
  EXPECT_THROW(solve_exact({{1, 2}, {2, 4}}, {1, 1}), PreconditionError);
}

TEST(ExactLinalg, LdlReconstructs) {
  const Matrix<Rational> a{{4, 2, 2}, {2, 5, 3}, {2, 3, 6}};
  const auto f = ldl_decompose(a);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_GT(f.diag[i], 0);
    for (std::size_t j = 0; j < 3; ++j) {
      Rational s = 0;
      for (std::size_t k = 0; k < 3; ++k) s += f.lower[i][k] * f.diag[k] * f.lower[j][k];
      EXPECT_EQ(s, a[i][j]);
    }
  }
  EXPECT_THROW(ldl_decompose({{1, 2}, {2, 1}}), PreconditionError);
}

}  // namespace
