#include <gtest/gtest.h>

#include <set>

#include "avoid132/counting.hpp"
#include "avoid132/errors.hpp"
#include "avoid132/plane_tree.hpp"

namespace avoid132 {
namespace {

using Values = std::vector<int>;

TEST(PlaneTree, Codec) {
  EXPECT_EQ(parse_tree("(())").edges(), 2);
  EXPECT_EQ(parse_tree("(())"), PlaneTree::path(2));
  EXPECT_EQ(parse_tree("()()"), PlaneTree::star(2));
  EXPECT_EQ(parse_tree("").vertex_count(), 1);
  EXPECT_EQ(to_text(PlaneTree{}), "");
}

TEST(PlaneTree, CodecRoundTrip) {
  for (int n = 0; n <= 10; ++n) {
    for_each_tree(n, [&](const PlaneTree& t) { ASSERT_EQ(to_text(parse_tree(to_text(t))), to_text(t)); });
  }
}

TEST(PlaneTree, ParseErrorsCarryOffsets) {
  const auto offset_of = [](std::string_view w) {
    try {
      parse_tree(w);
    } catch (const ParseError& e) {
      return static_cast<long>(e.offset());
    }
    return -1L;
  };
  EXPECT_EQ(offset_of("())"), 2);
  EXPECT_EQ(offset_of("(()"), 3);
  EXPECT_EQ(offset_of("(x)"), 1);
}

TEST(PlaneTree, Enumeration) {
  const auto two = enumerate_trees(2);
  ASSERT_EQ(two.size(), 2u);
  std::set<std::string> words;
  for (const auto& t : two) words.insert(to_text(t));
  EXPECT_EQ(words, (std::set<std::string>{"(())", "()()"}));
  EXPECT_EQ(enumerate_trees(3).size(), 5u);
  ASSERT_EQ(enumerate_trees(0).size(), 1u);
  EXPECT_EQ(enumerate_trees(0).front().edges(), 0);
  EXPECT_THROW(enumerate_trees(15), ResourceLimitError);
  for (int n = 0; n <= 10; ++n) {
    const auto all = enumerate_trees(n);
    ASSERT_EQ(Nat(all.size()), catalan(n));
    std::set<std::string> distinct;
    for (const auto& t : all) distinct.insert(to_text(t));
    ASSERT_EQ(distinct.size(), all.size());
  }
}

TEST(PlaneTree, ShardsPartitionTheStream) {
  std::multiset<std::string> merged;
  for (int s = 0; s < 4; ++s) for_each_tree(7, [&](const PlaneTree& t) { merged.insert(to_text(t)); }, Shard{s, 4});
  std::multiset<std::string> serial;
  for_each_tree(7, [&](const PlaneTree& t) { serial.insert(to_text(t)); });
  EXPECT_EQ(merged, serial);
}

TEST(Statistics, Heights) {
  EXPECT_EQ(heights(parse_tree("(())")).values, (Values{0, 1, 2}));
  EXPECT_EQ(heights(parse_tree("()()")).values, (Values{0, 1, 1}));
  EXPECT_EQ(heights(parse_tree("(())()")).values, (Values{0, 1, 1, 2}));
}

TEST(Statistics, RightSpanningWidth) {
  const PlaneTree path = parse_tree("(())");
  EXPECT_EQ(rsw(path, VertexRef{{0}}), 1);
  EXPECT_EQ(rsw(path, VertexRef{{0, 0}}), 0);
  EXPECT_EQ(rsw(path, VertexRef{}), 1);
  const PlaneTree star = parse_tree("()()");
  EXPECT_EQ(rsw(star, VertexRef{{0}}), 1);
  EXPECT_EQ(rsw(star, VertexRef{{1}}), 0);
  EXPECT_EQ(rsw(star, VertexRef{}), 2);
  EXPECT_EQ(rsw_multiset(parse_tree("()()()"), Population::kAll).values, (Values{0, 1, 2, 3}));
  EXPECT_THROW(rsw(star, VertexRef{{2}}), DomainError);
}

TEST(Statistics, RswPopulations) {
  EXPECT_EQ(rsw_multiset(parse_tree("(())"), Population::kAll).values, (Values{0, 1, 1}));
  EXPECT_EQ(rsw_multiset(parse_tree("()()"), Population::kAll).values, (Values{0, 1, 2}));
  EXPECT_EQ(rsw_multiset(parse_tree("(()())"), Population::kInternal).values, (Values{1, 2}));
}

TEST(Statistics, Maxima) {
  for (int n = 1; n <= 6; ++n) {
    EXPECT_EQ(tree_height(PlaneTree::path(n)), n);
    EXPECT_EQ(rsw_tree(PlaneTree::path(n)), 1);
    EXPECT_EQ(tree_height(PlaneTree::star(n)), 1);
    EXPECT_EQ(rsw_tree(PlaneTree::star(n)), n);
  }
  EXPECT_EQ(tree_height(parse_tree("(())()")), 2);
  EXPECT_EQ(rsw_tree(parse_tree("(())()")), 2);
  EXPECT_THROW(rsw_tree(PlaneTree{}), DomainError);
}

TEST(Statistics, Paths) {
  EXPECT_EQ(left_paths(PlaneTree::path(4)).parts(), (Values{4}));
  EXPECT_EQ(left_paths(PlaneTree::star(4)).parts(), (Values{1, 1, 1, 1}));
  EXPECT_EQ(left_path_lengths(parse_tree("(())()")), (Values{2, 1}));
  EXPECT_EQ(left_path_lengths(parse_tree("()(())")), (Values{1, 2}));
  EXPECT_EQ(right_paths(parse_tree("()(())")).parts(), (Values{2, 1}));
  EXPECT_EQ(internal_outdegrees(PlaneTree::star(4)).parts(), (Values{4}));
  EXPECT_EQ(internal_outdegrees(PlaneTree::path(3)).parts(), (Values{1, 1, 1}));
  EXPECT_EQ(internal_outdegrees(parse_tree("(())()")).parts(), (Values{2, 1}));
}

TEST(Statistics, PathAndDegreeSums) {
  for (int n = 1; n <= 9; ++n) {
    for_each_tree(n, [&](const PlaneTree& t) {
      ASSERT_EQ(internal_outdegrees(t).sum(), n);
      ASSERT_EQ(left_paths(t).sum(), n);
      ASSERT_EQ(right_paths(t).sum(), n);
      ASSERT_EQ(left_paths(t).count(), static_cast<int>(t.leaves().size()));
      ASSERT_EQ(level_profile(t).even_degrees.sum(), n);
      ASSERT_EQ(heights(t).size(), n + 1);
      ASSERT_EQ(rsw_multiset(t, Population::kAll).size(), n + 1);
    });
  }
}

TEST(Statistics, LevelProfile) {
  const auto star = level_profile(PlaneTree::star(3));
  EXPECT_EQ(star.even_degrees.parts(), (Values{3}));
  EXPECT_EQ(star.odd_outdegrees, (Values{0, 0, 0}));
  const auto path = level_profile(PlaneTree::path(2));
  EXPECT_EQ(path.even_degrees.parts(), (Values{1, 1}));
  EXPECT_EQ(path.odd_outdegrees, (Values{1}));
  const auto single = level_profile(PlaneTree{});
  EXPECT_TRUE(single.even_degrees.parts().empty());
  EXPECT_TRUE(single.odd_outdegrees.empty());
}

TEST(Transforms, Mirror) {
  EXPECT_EQ(to_text(mirror(parse_tree("(())()"))), "()(())");
  for (int n = 0; n <= 10; ++n) {
    for_each_tree(n, [&](const PlaneTree& t) { ASSERT_EQ(mirror(mirror(t)), t); });
  }
}

TEST(Transforms, LevelSwitchSwapsLevelPopulations) {
  EXPECT_THROW(level_switch(PlaneTree{}), DomainError);
  for (int n = 1; n <= 9; ++n) {
    for_each_tree(n, [&](const PlaneTree& t) {
      const PlaneTree s = level_switch(t);
      ASSERT_EQ(s.edges(), n);
      int even = 0, odd = 0, even_s = 0, odd_s = 0;
      std::vector<int> even_deg, odd_deg, even_deg_s, odd_deg_s;
      const auto degree = [](const PlaneTree& x, int v) { return x.outdegree(v) + (v == 0 ? 0 : 1); };
      for (int v = 0; v < t.vertex_count(); ++v) {
        (t.depth(v) % 2 == 0 ? even : odd) += 1;
        (t.depth(v) % 2 == 0 ? even_deg : odd_deg).push_back(degree(t, v));
      }
      for (int v = 0; v < s.vertex_count(); ++v) {
        (s.depth(v) % 2 == 0 ? even_s : odd_s) += 1;
        (s.depth(v) % 2 == 0 ? even_deg_s : odd_deg_s).push_back(degree(s, v));
      }
      ASSERT_EQ(even, odd_s);
      ASSERT_EQ(odd, even_s);
      std::sort(even_deg.begin(), even_deg.end());
      std::sort(odd_deg.begin(), odd_deg.end());
      std::sort(even_deg_s.begin(), even_deg_s.end());
      std::sort(odd_deg_s.begin(), odd_deg_s.end());
      ASSERT_EQ(even_deg, odd_deg_s) << to_text(t);
      ASSERT_EQ(odd_deg, even_deg_s) << to_text(t);
    });
  }
}

TEST(PlaneTree, Addresses) {
  const PlaneTree t = parse_tree("(()())()");
  for (int v = 0; v < t.vertex_count(); ++v) ASSERT_EQ(t.vertex(t.address(v)), v);
  EXPECT_EQ(t.address(3).path, (Values{0, 1}));
}

}  // namespace
}  // namespace avoid132
