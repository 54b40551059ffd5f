#include <gtest/gtest.h>

#include "cmsym/gauge.hpp"
#include "support.hpp"

using namespace cmsym;
using namespace cmsym::testing;

namespace {

TEST(Gauge, TrigARemainderClosedForm) {
  for (int N = 1; N <= 3; ++N) {
    GaugeCheck g = gauge_remainder(Family::TrigA, N);
    ASSERT_TRUE(g.constant);
    Frac n(static_cast<long>(N));
    EXPECT_EQ(g.remainder, k() * k() * n * (n * n - Frac(1L)) / Frac(3L)) << N;
  }
}

TEST(Gauge, RationalRemaindersVanish) {
  for (int N = 1; N <= 3; ++N) {
    GaugeCheck a = gauge_remainder(Family::RatA, N), b = gauge_remainder(Family::RatB, N);
    EXPECT_TRUE(a.constant);
    EXPECT_TRUE(b.constant);
    EXPECT_TRUE(a.remainder.is_zero());
    EXPECT_TRUE(b.remainder.is_zero());
  }
}

TEST(Gauge, BCRemainderIsConstant) {
  for (int N = 1; N <= 2; ++N) EXPECT_TRUE(gauge_remainder(Family::TrigBC, N).constant);
  GaugeCheck g = gauge_remainder(Family::TrigBC, 1);
  // One coordinate: G = -p coth x - 2q coth 2x leaves (p + 2q)^2.
  EXPECT_EQ(g.remainder, F("(p + 2*q)^2"));
}

TEST(Gauge, DeformedRemainderIsConstant) {
  EXPECT_TRUE(gauge_remainder(DeformedContext(1, 1)).constant);
  for (auto [m, n] : {std::pair{2, 1}, std::pair{1, 2}, std::pair{2, 0}})
    EXPECT_TRUE(gauge_remainder(DeformedContext(m, n, F("3/7"), F("-5/2"), F("11/3"))).constant) << m << "," << n;
}

TEST(Gauge, GaugedOperatorsMatchTheImplementedOnes) {
  for (Family f : {Family::TrigA, Family::RatA, Family::RatB, Family::TrigBC})
    for (int N = 1; N <= 2; ++N)
      for (const auto& l : partitions_up_to(3))
        EXPECT_TRUE(gauge_matches_operator(f, N, phi_N(SymFun::monomial(l), N))) << family_name(f) << " N=" << N;
  DeformedContext ctx(1, 1);
  for (const auto& l : partitions_up_to(3)) EXPECT_TRUE(gauge_matches_operator(ctx, phi_mn(SymFun::monomial(l), ctx)));
}

}  // namespace
