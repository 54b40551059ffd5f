#include <gtest/gtest.h>

#include "cmsym/errors.hpp"
#include "cmsym/serialize.hpp"
#include "support.hpp"

using namespace cmsym;
using namespace cmsym::testing;

namespace {

TEST(Serialize, EigenResultRoundTrip) {
  for (const auto& l : partitions_up_to(3)) {
    EigenResult r = jack(l);
    EigenResult back = eigen_result_from_json(to_json(r));
    EXPECT_EQ(back.label, r.label);
    EXPECT_EQ(back.family, r.family);
    EXPECT_EQ(back.eigenvalue, r.eigenvalue);
    EXPECT_EQ(back.expansion, r.expansion);
  }
  EigenResult j = jacobi({1});
  EXPECT_EQ(eigen_result_from_json(to_json(j)).expansion, j.expansion);
}

TEST(Serialize, EigenResultShape) {
  std::string text = to_json(jack({1}));
  EXPECT_EQ(text,
            "{\n"
            "  \"label\": \"1\",\n"
            "  \"family\": \"trigA\",\n"
            "  \"eigenvalue\": \"" + to_string(F("1 + k - k*p0")) + "\",\n"
            "  \"expansion\": [\n"
            "    {\n"
            "      \"partition\": \"1\",\n"
            "      \"coefficient\": \"1\"\n"
            "    }\n"
            "  ]\n"
            "}\n");
}

TEST(Serialize, SuperJacobiRoundTrip) {
  DeformedContext ctx(1, 1);
  ctx.k = Frac(2L);
  SuperJacobi s = super_jacobi({2}, ctx);
  s.parameters = {{Param::k, Frac(2L)}};
  SuperJacobi back = super_jacobi_from_json(to_json(s));
  EXPECT_EQ(back.label, s.label);
  EXPECT_EQ(back.m, 1);
  EXPECT_EQ(back.n, 1);
  EXPECT_EQ(back.parameters, s.parameters);
  EXPECT_EQ(back.value, s.value);
}

TEST(Serialize, ReportRoundTrip) {
  Report r;
  r.suite = "demo";
  r.cases = {{"a", CaseStatus::Pass, ""}, {"b", CaseStatus::Fail, "mismatch"}, {"c", CaseStatus::Info, "note"}};
  Report back = report_from_json(to_json(r));
  ASSERT_EQ(back.cases.size(), 3U);
  EXPECT_EQ(back.suite, "demo");
  EXPECT_EQ(back.cases[1].status, CaseStatus::Fail);
  EXPECT_EQ(back.cases[2].detail, "note");
  EXPECT_EQ(back.summary(), "1 passed, 1 failed, 1 informational");
  EXPECT_EQ(to_text(r), "pass  a\nfail  b  (mismatch)\ninfo  c  (note)\ndemo: 1 passed, 1 failed, 1 informational\n");
}

TEST(Serialize, MalformedInputIsAParseError) {
  EXPECT_THROW(eigen_result_from_json("{"), ParseError);
  EXPECT_THROW(eigen_result_from_json("{\"label\": \"1\"}"), ParseError);
  EXPECT_THROW(eigen_result_from_json("{\"label\": 3, \"family\": \"trigA\", \"eigenvalue\": \"1\", \"expansion\": []}"), ParseError);
  EXPECT_THROW(report_from_json("{\"suite\": \"x\", \"cases\": [{\"id\": \"a\", \"status\": \"maybe\", \"detail\": \"\"}]}"),
               ParseError);
  EXPECT_THROW(super_jacobi_from_json("{\"label\": \"1\", \"m\": 1, \"n\": 0, \"parameters\": {\"z\": \"1\"}, \"value\": \"1\"}"),
               ParseError);
}

}  // namespace
