#include <gtest/gtest.h>

#include <stdexcept>

#include "cmsym/poly.hpp"
#include "support.hpp"

using namespace cmsym;
using namespace cmsym::testing;

namespace {

Poly K() { return Poly::variable(slot(Param::k)); }
Poly P0() { return Poly::variable(slot(Param::p0)); }

TEST(Poly, AddMulSubExamples) {
  EXPECT_EQ((K() + Poly(1L)) + (K() - Poly(1L)), K().scaled(2));
  EXPECT_EQ((K() + Poly(1L)) * (K() - Poly(1L)), K() * K() - Poly(1L));
  EXPECT_TRUE((P0() * K() - P0() * K()).is_zero());
}

TEST(Poly, NoZeroTermsAfterCancellation) {
  Poly a = K() * K() + K();
  Poly b = a - K() * K();
  EXPECT_EQ(b.size(), 1U);
  EXPECT_EQ(b, K());
}

TEST(Poly, RingAxiomsOnRandomPolynomials) {
  std::mt19937 rng(7);
  for (int i = 0; i < 100; ++i) {
    Poly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    EXPECT_EQ((a + b) * c, a * c + b * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
  }
}

TEST(Poly, LeadingTermIsGradedLexMaximal) {
  Poly f = K() + K() * P0() + Poly(3L);
  EXPECT_EQ(f.leading().mono.degree(), 2U);
  EXPECT_EQ(to_string(f), "k*p0 + k + 3");
}

TEST(Poly, ExactDivision) {
  std::mt19937 rng(11);
  for (int i = 0; i < 50; ++i) {
    Poly a = random_poly(rng), b = random_nonzero_poly(rng);
    auto q = (a * b).divide_exact(b);
    ASSERT_TRUE(q.has_value());
    EXPECT_EQ(*q, a);
  }
  EXPECT_FALSE((K() + Poly(1L)).divide_exact(K()).has_value());
}

TEST(Poly, GcdRecoversCommonFactor) {
  std::mt19937 rng(13);
  for (int i = 0; i < 40; ++i) {
    Poly g = random_nonzero_poly(rng), a = random_nonzero_poly(rng), b = random_nonzero_poly(rng);
    Poly d = gcd(a * g, b * g);
    EXPECT_TRUE((a * g).divide_exact(d).has_value());
    EXPECT_TRUE((b * g).divide_exact(d).has_value());
    EXPECT_TRUE(d.divide_exact(g.primitive()).has_value() || g.is_constant());
  }
  EXPECT_EQ(gcd(K() * K() - Poly(1L), K() * K() + K().scaled(2) + Poly(1L)), K() + Poly(1L));
  EXPECT_TRUE(gcd(Poly(), Poly()).is_zero());
}

TEST(Poly, SquareRoot) {
  Poly f = K() + P0().scaled(Rational(1, 2)) - Poly(3L);
  auto r = sqrt_exact(f * f);
  ASSERT_TRUE(r.has_value());
  EXPECT_TRUE(*r == f || *r == -f);
  EXPECT_FALSE(sqrt_exact(K() * K() + Poly(1L)).has_value());
}

TEST(Poly, DerivativeAndSubstitution) {
  Poly f = K() * K() * P0() + K();
  EXPECT_EQ(f.derivative(slot(Param::k)), (K() * P0()).scaled(2) + Poly(1L));
  EXPECT_EQ(f.substitute(slot(Param::k), Poly(2L)), P0().scaled(4) + Poly(2L));
}

TEST(Poly, ExponentOverflowIsReported) {
  Poly f = K().pow(200);
  EXPECT_THROW(f * f, std::overflow_error);
}

}  // namespace
