#include <gtest/gtest.h>

#include "cmsym/inf_operators.hpp"
#include "support.hpp"

using namespace cmsym;
using namespace cmsym::testing;

namespace {

const Family kFamilies[] = {Family::TrigA, Family::RatA, Family::RatB, Family::TrigBC};

SymFun p(std::initializer_list<int> parts, const Frac& c = Frac(1L)) { return SymFun::monomial(Partition(parts), c); }

TEST(InfOperators, HandComputedImages) {
  InfOperator a(Family::TrigA);
  EXPECT_EQ(apply_inf(a, p({1})), p({1}, F("1 + k - k*p0")));
  EXPECT_EQ(apply_inf(a, p({2})), p({2}, F("4 + 4*k - 2*k*p0")) + p({1, 1}, F("-2*k")));
  EXPECT_EQ(apply_inf(InfOperator(Family::RatB), p({1})), SymFun::constant(F("(k + 1/2 - l)*p0 - k*p0^2")));
  EXPECT_EQ(apply_inf(InfOperator(Family::TrigBC), p({1})),
            p({1}, F("1 + 2*k + 2*h")) + SymFun::constant(F("(1 + 2*k + 2*h - p)*p0")));
  for (Family f : kFamilies) EXPECT_TRUE(apply_inf(InfOperator(f), SymFun::constant(Frac(1L))).is_zero());
}

TEST(InfOperators, Linearity) {
  std::mt19937 rng(53);
  for (Family f : kFamilies) {
    InfOperator op(f);
    for (int i = 0; i < 50; ++i) {
      SymFun x = random_symfun(rng, 4), y = random_symfun(rng, 4);
      Frac a = F("2*k - 1/3"), b = F("p0 + 5");
      EXPECT_EQ(apply_inf(op, x.scaled(a) + y.scaled(b)), apply_inf(op, x).scaled(a) + apply_inf(op, y).scaled(b));
    }
  }
}

TEST(InfOperators, DegreeBehaviour) {
  for (Family f : kFamilies) {
    InfOperator op(f);
    for (const auto& l : partitions_up_to(5)) {
      SymFun image = apply_inf(op, SymFun::monomial(l));
      for (const auto& [mu, c] : image.terms()) {
        switch (f) {
          case Family::TrigA: EXPECT_EQ(mu.weight(), l.weight()); break;
          case Family::RatA: EXPECT_EQ(mu.weight(), l.weight() - 2); break;
          case Family::RatB: EXPECT_EQ(mu.weight(), l.weight() - 1); break;
          case Family::TrigBC: EXPECT_LE(mu.weight(), l.weight()); break;
        }
      }
    }
  }
}

TEST(InfOperators, DegreeCapTruncatesTheImage) {
  InfOperator bc(Family::TrigBC);
  SymFun f = p({3, 1}) + p({2});
  EXPECT_EQ(apply_inf(bc, f, 2), apply_inf(bc, f).truncated(2));
}

TEST(InfOperators, Momentum) {
  EXPECT_EQ(momentum(p({2})), p({2}, Frac(2L)));
  EXPECT_EQ(momentum(p({2, 1})), p({2, 1}, Frac(3L)));
  EXPECT_TRUE(momentum(SymFun::constant(Frac(1L))).is_zero());
}

TEST(InfOperators, MomentumCommutesWithTrigA) {
  EXPECT_TRUE(commutator_vanishes(InfOperator(Family::TrigA), 4));
  EXPECT_TRUE(commutator_vanishes(InfOperator(Family::TrigA), 1));
  EXPECT_THROW(commutator_vanishes(InfOperator(Family::RatA), 3), std::invalid_argument);
}

TEST(InfOperators, BoundParameters) {
  InfOperator a(Family::TrigA, {{Param::k, Frac(2L)}});
  EXPECT_EQ(apply_inf(a, p({1})), p({1}, F("3 - 2*p0")));
  EXPECT_EQ(a.with(Param::p0, Frac(1L)).param(Param::p0), Frac(1L));
  EXPECT_EQ(a.param(Param::p0), p0());
}

TEST(InfOperators, FamilyNames) {
  for (Family f : kFamilies) EXPECT_EQ(family_from_name(family_name(f)), f);
  EXPECT_EQ(family_name(Family::TrigBC), "trigBC");
  EXPECT_FALSE(family_from_name("trigB").has_value());
}

TEST(InfOperators, Differentiate) {
  // d_a = a d/dp_a
  EXPECT_EQ(differentiate({2, 2, 1}, 2), p({2, 1}, Frac(4L)));
  EXPECT_TRUE(differentiate({2, 1}, 3).is_zero());
}

}  // namespace
