#include <gtest/gtest.h>

#include "cmsym/finite_models.hpp"
#include "cmsym/symfun.hpp"
#include "support.hpp"

using namespace cmsym;
using namespace cmsym::testing;

namespace {

MPoly z(int N, int i) { return MPoly::variable(VarLayout::z(N), i); }

TEST(SymFun, PhiNExamples) {
  EXPECT_EQ(phi_N(SymFun::power_sum(1), 2), z(2, 0) + z(2, 1));
  EXPECT_TRUE(phi_N(SymFun::power_sum(2) - SymFun::monomial({1, 1}), 1).is_zero());
  MPoly expected = (z(3, 0) + z(3, 1) + z(3, 2)).scaled(Frac(3L));
  EXPECT_EQ(phi_N(SymFun::monomial({1}, p0()), 3), expected);
}

TEST(SymFun, PhiNIsMultiplicative) {
  std::mt19937 rng(31);
  for (int i = 0; i < 20; ++i) {
    SymFun f = random_symfun(rng, 3), g = random_symfun(rng, 3);
    for (int N = 1; N <= 4; ++N) EXPECT_EQ(phi_N(f * g, N), phi_N(f, N) * phi_N(g, N));
  }
}

TEST(SymFun, BasisChangeExamples) {
  EXPECT_EQ(p_to_m(SymFun::power_sum(2), 2).coeffs, (std::map<Partition, Frac>{{{2}, Frac(1L)}}));
  EXPECT_EQ(p_to_m(SymFun::monomial({1, 1}), 2).coeffs, (std::map<Partition, Frac>{{{2}, Frac(1L)}, {{1, 1}, Frac(2L)}}));
  SymFun m11 = (SymFun::monomial({1, 1}) - SymFun::power_sum(2)).scaled(F("1/2"));
  EXPECT_EQ(monomial_symmetric({1, 1}), m11);
}

// Oracle: the coefficient of z^mu in phi_N(p_lambda), N = |lambda|.
Rational coefficient_by_expansion(const Partition& lambda, const Partition& mu) {
  int N = lambda.weight();
  MPoly image = phi_N(SymFun::monomial(lambda), N);
  Monomial m;
  for (int i = 0; i < mu.length(); ++i) m.set(static_cast<std::size_t>(i), static_cast<unsigned>(mu[static_cast<std::size_t>(i)]));
  return image.coefficient(m).constant_value();
}

TEST(SymFun, TransitionCoefficientsMatchDirectExpansion) {
  for (int d = 1; d <= 5; ++d)
    for (const auto& lambda : partitions_of(d))
      for (const auto& mu : partitions_of(d))
        EXPECT_EQ(power_to_monomial_coefficient(lambda, mu), coefficient_by_expansion(lambda, mu))
            << to_string(lambda) << " " << to_string(mu);
}

TEST(SymFun, BasisChangeRoundTrip) {
  for (const auto& l : partitions_up_to(6)) {
    SymFun p = SymFun::monomial(l);
    EXPECT_EQ(m_to_p(p_to_m(p, 6)), p);
  }
  std::mt19937 rng(37);
  for (int i = 0; i < 10; ++i) {
    SymFun f = random_symfun(rng, 5);
    EXPECT_EQ(m_to_p(p_to_m(f, 5)), f);
  }
}

TEST(SymFun, MonomialSymmetricEvaluatesToMonomials) {
  for (const auto& l : partitions_up_to(4)) {
    int N = 4;
    MPoly image = phi_N(monomial_symmetric(l), N);
    for (const auto& [mono, c] : image.terms()) {
      std::vector<int> exps;
      for (int i = 0; i < N; ++i)
        if (mono[static_cast<std::size_t>(i)]) exps.push_back(static_cast<int>(mono[static_cast<std::size_t>(i)]));
      EXPECT_EQ(Partition(exps), l);
      EXPECT_EQ(c, Frac(1L));
    }
  }
}

TEST(SymFun, PhiNInjectiveInLowDegree) {
  for (int d = 1; d <= 4; ++d) EXPECT_TRUE(kernel_basis(Restriction::finite(d), d).empty());
}

TEST(SymFun, GradingViews) {
  SymFun f = SymFun::monomial({2, 1}, F("k")) + SymFun::power_sum(1) + SymFun::constant(Frac(5L));
  EXPECT_EQ(f.max_degree(), 3);
  EXPECT_EQ(f.truncated(1), SymFun::power_sum(1) + SymFun::constant(Frac(5L)));
  EXPECT_EQ(f.homogeneous_component(3), SymFun::monomial({2, 1}, F("k")));
  EXPECT_TRUE((f - f).is_zero());
}

TEST(SymFun, Printing) {
  EXPECT_EQ(to_string(SymFun::power_sum(2) + SymFun::monomial({1, 1})), "p2 + p1^2");
  EXPECT_EQ(to_string(SymFun()), "0");
}

}  // namespace
