#include <gtest/gtest.h>

#include "cmsym/errors.hpp"
#include "cmsym/partition.hpp"

using namespace cmsym;

namespace {

TEST(Partition, NormalisesParts) {
  Partition p({1, 3, 2});
  EXPECT_EQ(p.parts(), (std::vector<int>{3, 2, 1}));
  EXPECT_EQ(p.weight(), 6);
  EXPECT_EQ(p.length(), 3);
  EXPECT_THROW(Partition({2, 0}), std::invalid_argument);
}

TEST(Partition, DominanceExamples) {
  EXPECT_EQ(dominance_compare({1, 1, 1}, {3}), Dominance::less);
  EXPECT_EQ(dominance_compare({2, 2}, {3, 1}), Dominance::less);
  EXPECT_EQ(dominance_compare({3, 1, 1, 1}, {2, 2, 2}), Dominance::incomparable);
  EXPECT_EQ(dominance_compare({2, 1}, {2, 1}), Dominance::equal);
  EXPECT_THROW(dominance_compare({2}, {1}), WeightMismatch);
}

TEST(Partition, DominanceIsAPartialOrder) {
  for (int n = 0; n <= 8; ++n) {
    auto all = partitions_of(n);
    for (const auto& a : all)
      for (const auto& b : all) {
        bool ab = dominated_by(a, b), ba = dominated_by(b, a);
        if (ab && ba) EXPECT_EQ(a, b);
        for (const auto& c : all)
          if (ab && dominated_by(b, c)) EXPECT_TRUE(dominated_by(a, c));
      }
  }
}

TEST(Partition, Enumeration) {
  const int counts[] = {1, 1, 2, 3, 5, 7, 11, 15, 22};
  for (int n = 0; n <= 8; ++n) EXPECT_EQ(partitions_of(n).size(), static_cast<std::size_t>(counts[n]));
  auto four = partitions_of(4);
  EXPECT_EQ(four.front(), Partition({4}));
  EXPECT_EQ(four.back(), Partition({1, 1, 1, 1}));
  auto up = partitions_up_to(3);
  EXPECT_EQ(up.size(), 7U);
  EXPECT_EQ(up.front(), Partition({3}));
  EXPECT_TRUE(up.back().empty());
}

TEST(Partition, DominantComesFirstWithinADegree) {
  for (int n = 1; n <= 8; ++n) {
    auto all = partitions_of(n);
    for (std::size_t i = 0; i < all.size(); ++i)
      for (std::size_t j = i + 1; j < all.size(); ++j) EXPECT_FALSE(dominated_by(all[i], all[j]) && all[i] != all[j]);
  }
}

TEST(Partition, TextRoundTrip) {
  EXPECT_EQ(to_string(Partition({2, 1})), "2,1");
  EXPECT_EQ(to_string(Partition()), "-");
  for (const auto& p : partitions_up_to(6)) EXPECT_EQ(parse_partition(to_string(p)), p);
  EXPECT_THROW(parse_partition("1,2"), ParseError);
  EXPECT_THROW(parse_partition("2,x"), ParseError);
  EXPECT_THROW(parse_partition(""), ParseError);
  EXPECT_THROW(parse_partition("0"), ParseError);
}

TEST(Partition, MultisetOperations) {
  Partition p({3, 1, 1});
  EXPECT_EQ(p.multiplicity(1), 2);
  EXPECT_EQ(p.with_part(2), Partition({3, 2, 1, 1}));
  EXPECT_EQ(p.without_part(1), Partition({3, 1}));
  EXPECT_EQ(p.merged({2}), Partition({3, 2, 1, 1}));
}

}  // namespace
