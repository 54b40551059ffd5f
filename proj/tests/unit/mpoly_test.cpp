#include <gtest/gtest.h>

#include "cmsym/errors.hpp"
#include "cmsym/mpoly.hpp"
#include "support.hpp"

using namespace cmsym;
using namespace cmsym::testing;

namespace {

const VarLayout kZ3 = VarLayout::z(3);

MPoly z(int i) { return MPoly::variable(kZ3, i); }

MPoly random_mpoly(std::mt19937& rng, const VarLayout& layout, int terms = 6) {
  std::uniform_int_distribution<int> coeff(-6, 6), exp(0, 3);
  MPoly f(layout);
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    for (int i = 0; i < layout.size(); ++i) m.set(static_cast<std::size_t>(i), static_cast<unsigned>(exp(rng)));
    f.add_term(m, Frac(static_cast<long>(coeff(rng))) + Frac(static_cast<long>(coeff(rng))) * k());
  }
  return f;
}

TEST(MPoly, ArithmeticAndDerivatives) {
  MPoly f = z(0) * z(0) + z(1).scaled(k());
  EXPECT_EQ(f.derivative(0), z(0).scaled(Frac(2L)));
  EXPECT_EQ(f.derivative(1), MPoly::constant(kZ3, k()));
  EXPECT_EQ(z(0).times_variable(0, 2), z(0).pow(3));
  EXPECT_TRUE((f - f).is_zero());
}

TEST(MPoly, DivisionByDifferenceIsExactIffTheHyperplaneIsAZero) {
  std::mt19937 rng(41);
  for (int t = 0; t < 40; ++t) {
    MPoly g = random_mpoly(rng, kZ3);
    MPoly f = g * (z(0) - z(2));
    EXPECT_TRUE(f.restrict_equal(0, 2).is_zero());
    EXPECT_EQ(f.divide_by_difference(0, 2), g);
    EXPECT_EQ(f.divide_by_difference(0, 2) * (z(0) - z(2)), f);
    MPoly h = f + MPoly::constant(kZ3, Frac(1L));
    EXPECT_FALSE(h.restrict_equal(0, 2).is_zero());
    EXPECT_THROW(h.divide_by_difference(0, 2), DivisionFailure);
  }
}

TEST(MPoly, AntisymmetrisedDerivativeOfSymmetricPolynomialDivides) {
  MPoly e2 = z(0) * z(1) + z(0) * z(2) + z(1) * z(2);
  MPoly p3 = z(0).pow(3) + z(1).pow(3) + z(2).pow(3);
  for (const MPoly& f : {e2, p3, e2 * p3}) {
    ASSERT_TRUE(f.symmetric_in(0, 3));
    MPoly anti = f.derivative(0).times_variable(0) - f.derivative(1).times_variable(1);
    MPoly q = anti.divide_by_difference(0, 1);
    EXPECT_EQ(q * (z(0) - z(1)), anti);
  }
}

TEST(MPoly, Symmetry) {
  EXPECT_TRUE((z(0) + z(1) + z(2)).symmetric_in(0, 3));
  EXPECT_FALSE((z(0) + z(1)).symmetric_in(0, 3));
  EXPECT_TRUE((z(0) + z(1)).symmetric_in(0, 2));
  EXPECT_EQ(z(0).swapped(0, 2), z(2));
}

TEST(MPoly, TextRoundTrip) {
  VarLayout uv = VarLayout::uv(2, 1);
  MPoly f = MPoly::variable(uv, 0).pow(2) * MPoly::variable(uv, 2).scaled(F("1/k")) + MPoly::constant(uv, F("-3/2"));
  EXPECT_EQ(to_string(f), "(1/k) * u1^2*v1 + (-3/2)");
  EXPECT_EQ(parse_mpoly(to_string(f), uv), f);
  std::mt19937 rng(43);
  for (int t = 0; t < 20; ++t) {
    MPoly g = random_mpoly(rng, uv);
    EXPECT_EQ(parse_mpoly(to_string(g), uv), g);
  }
  EXPECT_THROW(parse_mpoly("w1 + 1", uv), ParseError);
}

}  // namespace
