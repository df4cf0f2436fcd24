#include <gtest/gtest.h>

#include "avoid132/decomposition.hpp"
#include "avoid132/errors.hpp"

namespace avoid132 {
namespace {

const Permutation kSample{5, 3, 4, 6, 1, 2, 7};
const Permutation kLong{10, 8, 7, 9, 11, 6, 4, 3, 5, 12, 1, 2};

std::vector<std::vector<int>> values_of(const Decomposition& d) {
  std::vector<std::vector<int>> out;
  for (const auto& s : d.segments) out.push_back(s.values);
  return out;
}

using Groups = std::vector<std::vector<int>>;

TEST(Decomposition, IncreasingRuns) {
  EXPECT_EQ(values_of(ird(kSample)), (Groups{{5}, {3, 4, 6}, {1, 2, 7}}));
  EXPECT_EQ(ird(Permutation::identity(5)).segments.size(), 1u);
  EXPECT_EQ(ird(Permutation::reverse_identity(5)).segments.size(), 5u);
  EXPECT_EQ(ird(kSample).segments[1].positions, (std::vector<int>{2, 3, 4}));
}

TEST(Decomposition, DecreasingRuns) {
  EXPECT_EQ(values_of(drd(Permutation{2, 1, 3})), (Groups{{2, 1}, {3}}));
  EXPECT_EQ(drd(Permutation::reverse_identity(6)).segments.size(), 1u);
  EXPECT_EQ(values_of(drd(kSample)), (Groups{{5, 3}, {4}, {6, 1}, {2}, {7}}));
}

TEST(Decomposition, ValueConsecutiveChains) {
  EXPECT_EQ(values_of(vcis(kSample)), (Groups{{5, 6, 7}, {3, 4}, {1, 2}}));
  EXPECT_EQ(values_of(vcis(kLong)), (Groups{{10, 11, 12}, {8, 9}, {7}, {6}, {4, 5}, {3}, {1, 2}}));
  EXPECT_EQ(vcis(Permutation::parse("153642")).segments.size(), 3u);
}

TEST(Decomposition, LayeredEnvelope) {
  EXPECT_EQ(values_of(lde(kLong)), (Groups{{12, 2}, {11, 6, 5}, {10, 9}, {8, 7}, {4, 3}, {1}}));
  EXPECT_EQ(values_of(lde(Permutation::reverse_identity(4))), (Groups{{4, 3, 2, 1}}));
  EXPECT_EQ(lde(Permutation::identity(4)).segments.size(), 4u);
  EXPECT_THROW(lde(Permutation{1, 3, 2}), DomainError);
}

TEST(Decomposition, SegmentsPartitionPositions) {
  for (int n = 1; n <= 8; ++n) {
    for_each_avoider(n, [&](const Permutation& pi) {
      for (auto kind : {DecompositionKind::kIrd, DecompositionKind::kDrd, DecompositionKind::kVcis,
                        DecompositionKind::kLde}) {
        const auto d = decompose(pi, kind);
        std::vector<int> seen(static_cast<std::size_t>(n) + 1, 0);
        for (const auto& s : d.segments) {
          ASSERT_FALSE(s.positions.empty());
          for (std::size_t i = 0; i < s.positions.size(); ++i) {
            ++seen[static_cast<std::size_t>(s.positions[i])];
            ASSERT_EQ(pi.at(s.positions[i]), s.values[i]);
            if (i == 0) continue;
            ASSERT_LT(s.positions[i - 1], s.positions[i]);
            switch (kind) {
              case DecompositionKind::kIrd:
                ASSERT_EQ(s.positions[i], s.positions[i - 1] + 1);
                ASSERT_LT(s.values[i - 1], s.values[i]);
                break;
              case DecompositionKind::kDrd:
                ASSERT_EQ(s.positions[i], s.positions[i - 1] + 1);
                ASSERT_GT(s.values[i - 1], s.values[i]);
                break;
              case DecompositionKind::kVcis:
                ASSERT_EQ(s.values[i], s.values[i - 1] + 1);
                break;
              case DecompositionKind::kLde:
                ASSERT_GT(s.values[i - 1], s.values[i]);
                break;
            }
          }
        }
        for (int p = 1; p <= n; ++p) ASSERT_EQ(seen[static_cast<std::size_t>(p)], 1);
        ASSERT_EQ(length_distribution(d).sum(), n);
      }
    });
  }
}

TEST(LengthDistribution, Examples) {
  EXPECT_EQ(length_distribution(ird(kSample)).to_string(), "3,3,1");
  EXPECT_EQ(length_distribution(lde(kLong)).parts(), (std::vector<int>{3, 2, 2, 2, 2, 1}));
  EXPECT_EQ(LengthDistribution::parse("1,3,3"), LengthDistribution::from_lengths({3, 3, 1}));
  EXPECT_THROW(LengthDistribution::from_lengths({2, 0}), DomainError);
}

TEST(LengthDistribution, PartitionsOfN) {
  const std::vector<std::size_t> counts{1, 1, 2, 3, 5, 7, 11, 15, 22, 30};
  for (int n = 0; n < static_cast<int>(counts.size()); ++n) {
    const auto parts = integer_partitions(n);
    ASSERT_EQ(parts.size(), counts[static_cast<std::size_t>(n)]);
    for (const auto& p : parts) ASSERT_EQ(p.sum(), n);
  }
}

TEST(Decomposition, KindNames) {
  EXPECT_EQ(parse_decomposition_kind("lde"), DecompositionKind::kLde);
  EXPECT_EQ(to_string(DecompositionKind::kVcis), "vcis");
  EXPECT_THROW(parse_decomposition_kind("foo"), ParseError);
}

}  // namespace
}  // namespace avoid132
