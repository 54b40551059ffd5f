#include <gtest/gtest.h>

#include "cmsym/errors.hpp"
#include "cmsym/frac.hpp"
#include "support.hpp"

using namespace cmsym;
using namespace cmsym::testing;

namespace {

Frac unreduced(const char* num, const char* den) { return Frac::unreduced(F(num).num(), F(den).num()); }

TEST(Frac, EqualityByCrossMultiplication) {
  EXPECT_TRUE(frac_equal(F("1/k"), unreduced("k", "k^2")));
  EXPECT_TRUE(frac_equal(unreduced("k^2 - 1", "k - 1"), F("k + 1")));
  EXPECT_FALSE(frac_equal(F("1/k"), F("1/(k + 1)")));
  EXPECT_EQ(unreduced("k^2 - 1", "k - 1"), F("k + 1"));
}

TEST(Frac, EqualityIsAnEquivalence) {
  std::mt19937 rng(3);
  for (int i = 0; i < 100; ++i) {
    Poly a = random_poly(rng), b = random_nonzero_poly(rng), c = random_nonzero_poly(rng);
    Frac x = Frac::unreduced(a, b);
    Frac y = Frac::unreduced(a * c, b * c);
    Frac z = Frac(a * c * c, b * c * c);
    EXPECT_TRUE(frac_equal(x, x));
    EXPECT_EQ(frac_equal(x, y), frac_equal(y, x));
    EXPECT_TRUE(frac_equal(x, y) && frac_equal(y, z) && frac_equal(x, z));
  }
}

TEST(Frac, ReductionPreservesTheClass) {
  std::mt19937 rng(5);
  for (int i = 0; i < 50; ++i) {
    Poly a = random_poly(rng), b = random_nonzero_poly(rng), c = random_nonzero_poly(rng);
    Frac raw = Frac::unreduced(a * c, b * c);
    EXPECT_TRUE(frac_equal(raw, raw.reduced()));
  }
}

TEST(Frac, FieldArithmetic) {
  std::mt19937 rng(9);
  for (int i = 0; i < 50; ++i) {
    Frac x(random_poly(rng), random_nonzero_poly(rng)), y(random_poly(rng), random_nonzero_poly(rng));
    Frac z(random_nonzero_poly(rng), random_nonzero_poly(rng));
    EXPECT_EQ((x + y) * z, x * z + y * z);
    EXPECT_EQ((x / z) * z, x);
    EXPECT_EQ(x - x, Frac());
  }
}

TEST(Frac, SubstituteExamples) {
  EXPECT_EQ(substitute(F("2*k/(k - 1)"), {{Param::k, Frac(2L)}}), Frac(4L));
  EXPECT_THROW(substitute(F("2*k/(k - 1)"), {{Param::k, Frac(1L)}}), PoleError);
  Frac h = F("-k - 1 - p/2 - q");
  EXPECT_EQ(substitute(F("2*h - 1"), {{Param::h, h}}), F("-2*k - 2 - p - 2*q - 1"));
}

TEST(Frac, SubstituteCommutesWithProducts) {
  std::mt19937 rng(17);
  Bindings b{{Param::k, F("3/7")}, {Param::p, F("p0 + 1")}};
  int checked = 0;
  for (int i = 0; i < 60; ++i) {
    Frac x(random_poly(rng), random_nonzero_poly(rng)), y(random_poly(rng), random_nonzero_poly(rng));
    try {
      Frac sx = substitute(x, b), sy = substitute(y, b);
      EXPECT_EQ(substitute(x * y, b), sx * sy);
      EXPECT_EQ(substitute(x + y, b), sx + sy);
      ++checked;
    } catch (const PoleError&) {
    }
  }
  EXPECT_GT(checked, 30);
}

TEST(Frac, LimitExamples) {
  EXPECT_EQ(limit_along_parameter(unreduced("k^2 - 1", "k + 1"), Param::k, -1), Frac(-2L));
  EXPECT_EQ(limit_along_parameter(unreduced("k + 1", "k + 1"), Param::k, -1), Frac(1L));
  EXPECT_THROW(limit_along_parameter(F("1/(k + 1)"), Param::k, -1), PoleError);
}

TEST(Frac, LimitAgreesWithSubstitution) {
  std::mt19937 rng(23);
  for (int i = 0; i < 60; ++i) {
    Frac x(random_poly(rng), random_nonzero_poly(rng));
    try {
      Frac s = substitute(x, {{Param::k, Frac(-1L)}});
      EXPECT_EQ(limit_along_parameter(x, Param::k, -1), s);
    } catch (const PoleError&) {
    }
  }
}

TEST(Frac, TextRoundTrip) {
  EXPECT_EQ(to_string(F("2*k/(k - 1)")), "(2*k)/(k - 1)");
  EXPECT_EQ(to_string(F("3/6")), "1/2");
  std::mt19937 rng(29);
  for (int i = 0; i < 50; ++i) {
    Frac x(random_poly(rng), random_nonzero_poly(rng));
    EXPECT_EQ(parse_frac(to_string(x)), x);
  }
}

TEST(Frac, ParseErrors) {
  EXPECT_THROW(parse_frac("k +"), ParseError);
  EXPECT_THROW(parse_frac("zeta"), ParseError);
  EXPECT_THROW(parse_frac("1/0"), ParseError);
}

TEST(Frac, ZeroDenominatorIsAPole) { EXPECT_THROW(Frac(Poly(1L), Poly()), PoleError); }

TEST(Frac, SquareRoot) {
  Frac x = F("(k + 1)/(2*p - q)");
  auto r = sqrt_exact(x * x);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(*r * *r, x * x);
  EXPECT_FALSE(sqrt_exact(F("k")).has_value());
}

}  // namespace
