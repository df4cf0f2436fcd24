#include <gtest/gtest.h>

#include <set>

#include "avoid132/bijections.hpp"
#include "avoid132/counting.hpp"
#include "avoid132/decomposition.hpp"
#include "avoid132/errors.hpp"

namespace avoid132 {
namespace {

TEST(JaniRieper, TreeToPermutation) {
  EXPECT_EQ(jr_tree_to_perm(PlaneTree::path(5)), Permutation::identity(5));
  EXPECT_EQ(jr_tree_to_perm(PlaneTree::star(5)), Permutation::reverse_identity(5));
  EXPECT_EQ(jr_tree_to_perm(parse_tree("(()())")), (Permutation{2, 1, 3}));
  EXPECT_EQ(jr_tree_to_perm(PlaneTree{}), Permutation{});
}

TEST(JaniRieper, PermutationToTree) {
  EXPECT_EQ(to_text(jr_perm_to_tree(Permutation{2, 1, 3})), "(()())");
  EXPECT_EQ(to_text(jr_perm_to_tree(Permutation{3, 1, 2})), "()(())");
  EXPECT_EQ(jr_perm_to_tree(Permutation::identity(6)), PlaneTree::path(6));
  EXPECT_THROW(jr_perm_to_tree(Permutation{1, 3, 2}), DomainError);
}

TEST(JaniRieper, LabelsFollowPreorder) {
  const auto labelled = jr_labels(parse_tree("(()())"));
  EXPECT_EQ(labelled.labels, (std::vector<int>{0, 3, 2, 1}));
  EXPECT_EQ(labelled.vertex_of(2), 2);
  EXPECT_EQ(labelled.vertex_of(7), -1);
  for (int n = 1; n <= 8; ++n) {
    for_each_avoider(n, [&](const Permutation& pi) {
      ASSERT_EQ(jr_perm_to_labeled_tree(pi), jr_labels(jr_perm_to_tree(pi))) << pi.to_string();
    });
  }
}

TEST(Phi, ExampleTree) {
  const Permutation pi{10, 8, 7, 9, 11, 6, 4, 3, 5, 12, 1, 2};
  const LabeledPlaneTree t = phi_perm_to_tree(pi);
  std::vector<int> root_children;
  for (int c : t.shape.children(0)) root_children.push_back(t.labels[static_cast<std::size_t>(c)]);
  EXPECT_EQ(root_children, (std::vector<int>{10, 11, 12}));
  const auto children_of = [&](int label) {
    std::vector<int> out;
    for (int c : t.shape.children(t.vertex_of(label))) out.push_back(t.labels[static_cast<std::size_t>(c)]);
    return out;
  };
  EXPECT_EQ(children_of(10), (std::vector<int>{8, 9}));
  EXPECT_EQ(children_of(8), (std::vector<int>{7}));
  EXPECT_EQ(children_of(11), (std::vector<int>{6}));
  EXPECT_EQ(children_of(6), (std::vector<int>{4, 5}));
  EXPECT_EQ(children_of(4), (std::vector<int>{3}));
  EXPECT_EQ(children_of(12), (std::vector<int>{1, 2}));
  EXPECT_EQ(internal_outdegrees(t.shape), length_distribution(vcis(pi)));
}

TEST(Phi, PathsAndStars) {
  const auto path = phi_perm_to_tree(Permutation::reverse_identity(4));
  EXPECT_EQ(path.shape, PlaneTree::path(4));
  EXPECT_EQ(path.labels, (std::vector<int>{0, 4, 3, 2, 1}));
  const auto star = phi_perm_to_tree(Permutation::identity(4));
  EXPECT_EQ(star.shape, PlaneTree::star(4));
  EXPECT_EQ(star.labels, (std::vector<int>{0, 1, 2, 3, 4}));
  EXPECT_EQ(phi_tree_to_perm(parse_tree("(())()")), (Permutation{2, 1, 3}));
  EXPECT_EQ(phi_tree_to_perm(PlaneTree::star(5)), Permutation::identity(5));
  EXPECT_EQ(phi_tree_to_perm(PlaneTree::path(5)), Permutation::reverse_identity(5));
  EXPECT_THROW(phi_perm_to_tree(Permutation{1, 3, 2}), DomainError);
}

TEST(Bijections, RoundTripsAndImages) {
  for (int n = 0; n <= 8; ++n) {
    std::set<std::string> jr_image, phi_image;
    for_each_avoider(n, [&](const Permutation& pi) {
      const PlaneTree a = jr_perm_to_tree(pi);
      ASSERT_EQ(jr_tree_to_perm(a), pi);
      const LabeledPlaneTree b = phi_perm_to_tree(pi);
      ASSERT_EQ(phi_tree_to_perm(b.shape), pi);
      ASSERT_EQ(phi_labels(b.shape), b);
      jr_image.insert(to_text(a));
      phi_image.insert(to_text(b.shape));
    });
    ASSERT_EQ(Nat(jr_image.size()), catalan(n));
    ASSERT_EQ(Nat(phi_image.size()), catalan(n));
  }
}

}  // namespace
}  // namespace avoid132
