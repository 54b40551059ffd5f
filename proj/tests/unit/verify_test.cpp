#include <gtest/gtest.h>

#include "cmsym/serialize.hpp"
#include "cmsym/verify.hpp"

using namespace cmsym;

namespace {

TEST(Verify, SuiteNamesAreRunnable) {
  VerifyConfig cfg;
  cfg.max_degree = 2;
  cfg.samples = 1;
  for (const auto& name : suite_names()) {
    if (name == "theorem1" || name == "kernel") continue;  // slower, covered below
    Report r = run_suite(name, cfg);
    EXPECT_EQ(r.suite, name);
    EXPECT_FALSE(r.cases.empty()) << name;
    EXPECT_TRUE(r.passed()) << to_text(r);
  }
}

TEST(Verify, UnknownSuiteThrows) { EXPECT_THROW(run_suite("nope", VerifyConfig{}), std::invalid_argument); }

TEST(Verify, TheoremOnePassesAndHasANegativeControl) {
  VerifyConfig cfg;
  cfg.max_degree = 3;
  cfg.m = 1;
  cfg.n = 1;
  cfg.samples = 2;
  Report ok = run_suite("theorem1", cfg);
  EXPECT_TRUE(ok.passed()) << to_text(ok);

  cfg.bindings[Param::h] = Frac(0L);
  Report bad = run_suite("theorem1", cfg);
  EXPECT_FALSE(bad.passed());
  for (const auto& c : bad.cases)
    if (c.id.rfind("diagram", 0) == 0) EXPECT_EQ(c.status, CaseStatus::Fail) << c.id;
}

TEST(Verify, DeterministicForAFixedSeed) {
  VerifyConfig cfg;
  cfg.max_degree = 3;
  cfg.seed = 11;
  EXPECT_EQ(to_json(run_suite("eigen", cfg)), to_json(run_suite("eigen", cfg)));
}

TEST(Verify, SamplerRange) {
  RationalSampler s(3);
  bool negative = false;
  for (int i = 0; i < 500; ++i) {
    Rational r = s.next();
    EXPECT_LE(abs(r.get_num()), 20);
    EXPECT_GE(r.get_den(), 1);
    EXPECT_LE(r.get_den(), 20);
    negative = negative || r < 0;
    EXPECT_NE(s.next_nonzero(), 0);
  }
  EXPECT_TRUE(negative);
  RationalSampler a(5, 1), b(5, 1), c(5, 2);
  bool differs = false;
  for (int i = 0; i < 10; ++i) {
    Rational x = a.next();
    EXPECT_EQ(x, b.next());
    differs = differs || x != c.next();
  }
  EXPECT_TRUE(differs);
}

TEST(Verify, Summary) {
  Report r;
  r.cases = {{"a", CaseStatus::Pass, ""}, {"b", CaseStatus::Pass, ""}};
  EXPECT_EQ(r.summary(), "2 passed, 0 failed");
}

}  // namespace
