#include <gtest/gtest.h>

#include "cmsym/normal_symbol.hpp"
#include "support.hpp"

using namespace cmsym;
using namespace cmsym::testing;

namespace {

TEST(NormalSymbol, TrigAWindowEntries) {
  NormalSymbol s = normal_symbol(InfOperator(Family::TrigA), 2, 2);
  EXPECT_EQ(s.coefficient({2}, {1, 1}), Frac(1L));
  EXPECT_EQ(s.coefficient({1, 1}, {2}), F("-k"));
  EXPECT_EQ(s.coefficient({1}, {1}), F("1 + k - k*p0"));
  for (const auto& [key, c] : s.terms()) {
    EXPECT_LE(key.first.weight(), 2);
    EXPECT_LE(key.second.weight(), 2);
  }
}

TEST(NormalSymbol, SymbolReproducesTheOperator) {
  for (Family f : {Family::TrigA, Family::RatA, Family::RatB, Family::TrigBC}) {
    InfOperator op(f);
    NormalSymbol s = normal_symbol(op, 4, 4);
    for (const auto& nu : partitions_up_to(4)) {
      SymFun pn = SymFun::monomial(nu);
      EXPECT_EQ(apply_symbol(s, pn), apply_inf(op, pn)) << family_name(f) << " " << to_string(nu);
    }
  }
}

TEST(NormalSymbol, CommutationRelation) {
  // d_a p_a = p_a d_a + a
  NormalSymbol r = reorder({3}, {3}, Frac(1L));
  NormalSymbol expected;
  expected.add_term({3}, {3}, Frac(1L));
  expected.add_term({}, {}, Frac(3L));
  EXPECT_EQ(r, expected);
  NormalSymbol other = reorder({2}, {1}, Frac(1L));
  EXPECT_EQ(other.terms().size(), 1U);
  EXPECT_EQ(other.coefficient({1}, {2}), Frac(1L));
}

TEST(NormalSymbol, ReorderAgreesWithComposition) {
  // d_lambda (p_mu f) computed directly equals the reordered symbol applied to f.
  for (const auto& dl : partitions_up_to(3))
    for (const auto& pm : partitions_up_to(3)) {
      NormalSymbol s = reorder(dl, pm, Frac(1L));
      for (const auto& nu : partitions_up_to(2)) {
        SymFun g = SymFun::monomial(pm) * SymFun::monomial(nu);
        for (int a : dl.parts()) {
          SymFun next;
          for (const auto& [lam, c] : g.terms()) next += differentiate(lam, a).scaled(c);
          g = next;
        }
        EXPECT_EQ(apply_symbol(s, SymFun::monomial(nu)), g);
      }
    }
}

TEST(NormalSymbol, FourierSwap) {
  FourierReport r = fourier_swap_check(InfOperator(Family::TrigA), 4);
  EXPECT_TRUE(r.two_derivative_block_maps_to_two_p_block);
  EXPECT_TRUE(r.two_p_block_maps_to_two_derivative_block);
  EXPECT_TRUE(r.quadratic_blocks_exchange());
  EXPECT_TRUE(r.diagonal_block_preserved);
  ASSERT_EQ(r.reordering_constants.size(), 4U);
  for (const auto& [a, c] : r.reordering_constants) {
    Frac fa(static_cast<long>(a));
    EXPECT_EQ(c, (Frac(1L) + k()) * fa * fa - k() * p0() * fa) << a;
  }
}

}  // namespace
