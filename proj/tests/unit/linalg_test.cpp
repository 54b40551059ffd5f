#include <gtest/gtest.h>

#include "cmsym/linalg.hpp"
#include "support.hpp"

using namespace cmsym;
using namespace cmsym::testing;

namespace {

TEST(Linalg, InverseOverQ) {
  Matrix<Rational> a{{2, 1}, {1, 1}};
  auto inv = inverse(a);
  ASSERT_TRUE(inv.has_value());
  EXPECT_EQ((*inv)[0][0], Rational(1));
  EXPECT_EQ((*inv)[0][1], Rational(-1));
  EXPECT_EQ((*inv)[1][1], Rational(2));
  EXPECT_FALSE(inverse(Matrix<Rational>{{1, 2}, {2, 4}}).has_value());
}

TEST(Linalg, SymbolicNullspace) {
  // rows (1, k, k^2) and (k, k^2, k^3) are dependent: kernel of dimension 2.
  Matrix<Frac> a{{Frac(1L), k(), k() * k()}, {k(), k() * k(), k() * k() * k()}};
  auto ker = nullspace(a, 3);
  ASSERT_EQ(ker.size(), 2U);
  for (const auto& v : ker)
    for (const auto& row : a) {
      Frac dot;
      for (std::size_t j = 0; j < 3; ++j) dot += row[j] * v[j];
      EXPECT_TRUE(dot.is_zero());
    }
  EXPECT_EQ(ker[0][1], Frac(1L));
  EXPECT_EQ(ker[0][2], Frac());
}

TEST(Linalg, RankAndSpan) {
  Matrix<Frac> rows{{Frac(1L), k()}, {k(), k() * k()}};
  EXPECT_EQ(rank(rows), 1U);
  EXPECT_TRUE(in_span(rows, {F("2"), F("2*k")}));
  EXPECT_FALSE(in_span(rows, {F("1"), F("k + 1")}));
  EXPECT_EQ(rank({{Frac(1L), Frac()}, {Frac(), F("k - 1")}}), 2U);
}

}  // namespace
