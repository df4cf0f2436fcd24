#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "avoid132/counting.hpp"
#include "avoid132/errors.hpp"
#include "avoid132/permutation.hpp"

namespace avoid132 {
namespace {

const Permutation kSample{5, 3, 4, 6, 1, 2, 7};
const Permutation kLong{10, 8, 7, 9, 11, 6, 4, 3, 5, 12, 1, 2};

TEST(Permutation, ParsesSeparatorsAndDigitStrings) {
  EXPECT_EQ(Permutation::parse("5 3 4 6 1 2 7"), kSample);
  EXPECT_EQ(Permutation::parse("5,3,4,6,1,2,7"), kSample);
  EXPECT_EQ(Permutation::parse("5346127"), kSample);
  EXPECT_EQ(Permutation::parse("10,8,7,9,11,6,4,3,5,12,1,2"), kLong);
  EXPECT_EQ(Permutation::parse("").size(), 0);
}

TEST(Permutation, RejectsDuplicatesAndOutOfRange) {
  EXPECT_THROW(Permutation::parse("1 1 2"), ParseError);
  EXPECT_THROW(Permutation::parse("1 4 2"), ParseError);
  EXPECT_THROW(Permutation::parse("1 x 2"), ParseError);
  EXPECT_THROW(Permutation({0, 1}), DomainError);
}

TEST(Permutation, ParseErrorCarriesOffset) {
  try {
    Permutation::parse("1 2 x");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 4u);
  }
}

TEST(Pattern, Containment) {
  EXPECT_TRUE(contains_pattern(Permutation::parse("153642"), Permutation{1, 3, 2}));
  EXPECT_FALSE(contains_pattern(kSample, Permutation{1, 3, 2}));
  EXPECT_TRUE(contains_pattern(Permutation{}, Permutation{}));
}

TEST(Pattern, Avoids132Examples) {
  EXPECT_TRUE(avoids_132(kSample));
  EXPECT_TRUE(avoids_132(kLong));
  EXPECT_FALSE(avoids_132(Permutation{1, 3, 2}));
  EXPECT_TRUE(avoids_132(Permutation{}));
}

TEST(Pattern, StackScanAgreesWithSubsequenceSearch) {
  const Permutation pattern{1, 3, 2};
  for (int n = 0; n <= 7; ++n) {
    for_each_permutation(n, [&](const Permutation& pi) {
      ASSERT_EQ(avoids_132(pi), !contains_pattern(pi, pattern)) << pi.to_string();
    });
  }
}

TEST(Statistics, DescentAndAscentSets) {
  EXPECT_EQ(descent_set(Permutation::parse("153642")).positions, (std::vector<int>{2, 4, 5, 6}));
  EXPECT_EQ(descent_set(Permutation::identity(5)).positions, (std::vector<int>{5}));
  EXPECT_EQ(descent_set(kSample).positions, (std::vector<int>{1, 4, 7}));
  EXPECT_EQ(ascent_set(kLong).positions, (std::vector<int>{3, 4, 8, 9, 11}));
  EXPECT_TRUE(ascent_set(Permutation::reverse_identity(6)).positions.empty());
  EXPECT_EQ(ascent_set(Permutation{1, 2}).positions, (std::vector<int>{1}));
  EXPECT_THROW(descent_set(Permutation{}), DomainError);
}

TEST(Statistics, AscentsPlusDescentsIsN) {
  for (int n = 1; n <= 7; ++n) {
    for_each_permutation(n, [&](const Permutation& pi) {
      ASSERT_EQ(ascent_set(pi).size() + descent_set(pi).size(), n);
    });
  }
}

TEST(Statistics, ConsecutiveOccurrences) {
  EXPECT_EQ(consecutive_occurrences(Permutation::parse("34512"), Permutation{2, 3, 1}), 1);
  EXPECT_EQ(consecutive_occurrences(Permutation::parse("2341"), Permutation{2, 3, 4, 1}), 1);
  EXPECT_EQ(consecutive_occurrences(Permutation::parse("12345"), Permutation{2, 1}), 0);
  EXPECT_EQ(rising_drop_pattern(4), (Permutation{2, 3, 4, 1}));
}

TEST(Statistics, MaximalRunDrops) {
  EXPECT_EQ(maximal_run_drop_count(Permutation::parse("34512"), 3), 1);
  EXPECT_EQ(maximal_run_drop_count(Permutation::parse("12345"), 3), 0);
  EXPECT_EQ(maximal_run_drop_count(Permutation::parse("12345"), 5), 0);
  EXPECT_EQ(maximal_run_drop_count(Permutation::parse("2341"), 4), 1);
}

TEST(Statistics, WindowAndMaximalCountsCoincideOnAvoiders) {
  for (int n = 1; n <= 9; ++n) {
    for_each_avoider(n, [&](const Permutation& pi) {
      for (int k = 3; k <= 6; ++k) {
        ASSERT_EQ(consecutive_occurrences(pi, rising_drop_pattern(k)), maximal_run_drop_count(pi, k))
            << pi.to_string() << " k=" << k;
      }
    });
  }
}

// Longest increasing subsequence starting at a position, by trying every
// subset of later positions.
int lis_by_subsets(const Permutation& pi, int start) {
  const int n = pi.size();
  const int rest = n - start;
  int best = 1;
  for (int mask = 0; mask < (1 << rest); ++mask) {
    int last = pi.at(start);
    int len = 1;
    bool ok = true;
    for (int b = 0; b < rest && ok; ++b) {
      if ((mask >> b & 1) == 0) continue;
      const int v = pi.at(start + 1 + b);
      ok = v > last;
      last = v;
      ++len;
    }
    if (ok) best = std::max(best, len);
  }
  return best;
}

TEST(Statistics, LisFrom) {
  EXPECT_EQ(lis_from(kSample, 2), lis_by_subsets(kSample, 2));
  EXPECT_EQ(lis_from(kSample, 2), 4);
  EXPECT_EQ(lis_from(Permutation::identity(6), 1), 6);
  for (int s = 1; s <= 6; ++s) EXPECT_EQ(lis_from(Permutation::reverse_identity(6), s), 1);
  for_each_permutation(6, [&](const Permutation& pi) {
    for (int s = 1; s <= 6; ++s) ASSERT_EQ(lis_from(pi, s), lis_by_subsets(pi, s));
  });
}

TEST(Enumeration, SmallCases) {
  const auto three = enumerate_avoiders(3);
  const std::vector<Permutation> expected{{1, 2, 3}, {2, 1, 3}, {2, 3, 1}, {3, 1, 2}, {3, 2, 1}};
  EXPECT_EQ(three, expected);
  const auto zero = enumerate_avoiders(0);
  ASSERT_EQ(zero.size(), 1u);
  EXPECT_TRUE(zero.front().empty());
}

TEST(Enumeration, CatalanManyDistinctSortedAvoiders) {
  for (int n = 0; n <= 10; ++n) {
    const auto all = enumerate_avoiders(n);
    ASSERT_EQ(Nat(all.size()), catalan(n));
    ASSERT_TRUE(std::is_sorted(all.begin(), all.end()));
    ASSERT_EQ(std::adjacent_find(all.begin(), all.end()), all.end());
    for (const auto& pi : all) ASSERT_TRUE(avoids_132(pi));
  }
}

TEST(Enumeration, BoundIsEnforced) {
  EXPECT_THROW(enumerate_avoiders(15), ResourceLimitError);
  EXPECT_THROW(enumerate_avoiders(6, EnumerationLimits{.max_n = 5}), ResourceLimitError);
}

TEST(Enumeration, ShardsPartitionTheStream) {
  const int n = 8;
  std::vector<Permutation> merged;
  for (int s = 0; s < 3; ++s) {
    for_each_avoider(n, [&](const Permutation& pi) { merged.push_back(pi); }, Shard{s, 3});
  }
  std::sort(merged.begin(), merged.end());
  EXPECT_EQ(merged, enumerate_avoiders(n));
}

}  // namespace
}  // namespace avoid132
