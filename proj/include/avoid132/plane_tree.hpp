#pragma once

#include <compare>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "avoid132/decomposition.hpp"
#include "avoid132/permutation.hpp"

namespace avoid132 {

/// Address of a vertex as the sequence of child indices (0-based) followed
/// from the root. The root is the empty address.
struct VertexRef {
  std::vector<int> path;
  friend bool operator==(const VertexRef&, const VertexRef&) = default;
};

/// Unordered multiset of naturals, stored ascending.
struct StatMultiset {
  std::vector<int> values;

  static StatMultiset of(std::vector<int> values);
  int size() const noexcept { return static_cast<int>(values.size()); }
  friend bool operator==(const StatMultiset&, const StatMultiset&) = default;
  friend auto operator<=>(const StatMultiset&, const StatMultiset&) = default;
};

/// Rooted ordered tree with n edges. Vertices are numbered 0..n in preorder
/// (0 is the root), so two trees are equal iff their shapes are equal.
class PlaneTree {
 public:
  /// The single-vertex tree.
  PlaneTree();

  /// Balanced parenthesis word; each matched pair is an edge and siblings
  /// read left to right. The empty word is the single vertex. Throws
  /// ParseError with the offending offset.
  static PlaneTree parse(std::string_view word);

  /// A root whose children are the roots of `subtrees`, left to right.
  static PlaneTree join(const std::vector<PlaneTree>& subtrees);
  static PlaneTree path(int edges);
  static PlaneTree star(int edges);

  /// Tree given by arbitrary vertex ids and child lists. `new_id[old]` is the
  /// preorder number assigned to vertex `old` (-1 if unreachable).
  struct Renumbered;
  static Renumbered from_child_lists(int root, const std::vector<std::vector<int>>& children);

  int edges() const noexcept { return static_cast<int>(parent_.size()) - 1; }
  int vertex_count() const noexcept { return static_cast<int>(parent_.size()); }

  std::span<const int> children(int v) const { return children_.at(static_cast<std::size_t>(v)); }
  int parent(int v) const { return parent_.at(static_cast<std::size_t>(v)); }
  int depth(int v) const { return depth_.at(static_cast<std::size_t>(v)); }
  int outdegree(int v) const { return static_cast<int>(children(v).size()); }
  /// Index of v among its siblings (0 for the root).
  int child_index(int v) const { return child_index_.at(static_cast<std::size_t>(v)); }

  /// A non-root vertex without children. Everything else, the root
  /// included, is internal.
  bool is_leaf(int v) const { return v != 0 && outdegree(v) == 0; }
  bool is_internal(int v) const { return !is_leaf(v); }

  /// Leaves in depth-first (left-to-right) order.
  std::vector<int> leaves() const;

  /// Throws DomainError if the address does not exist.
  int vertex(const VertexRef& ref) const;
  VertexRef address(int v) const;

  std::string to_text() const;

  friend bool operator==(const PlaneTree& a, const PlaneTree& b) { return a.children_ == b.children_; }
  friend std::strong_ordering operator<=>(const PlaneTree& a, const PlaneTree& b);

 private:
  void index_from_children();

  std::vector<std::vector<int>> children_;
  std::vector<int> parent_;
  std::vector<int> depth_;
  std::vector<int> child_index_;
};

struct PlaneTree::Renumbered {
  PlaneTree tree;
  std::vector<int> new_id;
};

inline PlaneTree parse_tree(std::string_view word) { return PlaneTree::parse(word); }
inline std::string to_text(const PlaneTree& t) { return t.to_text(); }

/// Every plane tree with n edges exactly once, in lexicographic order of the
/// parenthesis word ('(' before ')'). Throws ResourceLimitError when
/// n > limits.max_n. The shard key is the first return: the number of edges
/// in the root's first subtree, 1..n.
void for_each_tree(int n, const std::function<void(const PlaneTree&)>& visit, Shard shard = {},
                   EnumerationLimits limits = {});
std::vector<PlaneTree> enumerate_trees(int n, EnumerationLimits limits = {});

StatMultiset heights(const PlaneTree& t);
int tree_height(const PlaneTree& t);

/// Children of v plus, for every proper ancestor u, the children of u lying
/// strictly to the right of the path from v to the root.
int rsw(const PlaneTree& t, int v);
int rsw(const PlaneTree& t, const VertexRef& v);

enum class Population { kAll, kInternal, kLeaves };
StatMultiset rsw_multiset(const PlaneTree& t, Population population);
StatMultiset leaf_heights(const PlaneTree& t);

/// Maximum rsw over internal vertices. Throws DomainError for n = 0.
int rsw_tree(const PlaneTree& t);

/// Left path decomposition: leaf t (in depth-first order) climbs until it
/// meets a vertex on an earlier path (the root counts as visited). Lengths
/// are returned in leaf order.
std::vector<int> left_path_lengths(const PlaneTree& t);
LengthDistribution left_paths(const PlaneTree& t);
/// The mirror-image decomposition (leaves taken right to left).
LengthDistribution right_paths(const PlaneTree& t);

/// Child counts of internal vertices, root included (empty for n = 0).
LengthDistribution internal_outdegrees(const PlaneTree& t);

struct LevelProfile {
  /// Outdegrees of odd-level vertices, non-increasing, zeros kept.
  std::vector<int> odd_outdegrees;
  /// Degrees of even-level vertices (children, plus the parent edge for
  /// non-root vertices). Sums to n; empty for the single-vertex tree.
  LengthDistribution even_degrees;
};
LevelProfile level_profile(const PlaneTree& t);

PlaneTree mirror(const PlaneTree& t);

/// Re-roots at the leftmost child v of the root. The old root, with its
/// remaining children, becomes the rightmost child of v. Parities of all
/// levels flip. Throws DomainError for n = 0.
PlaneTree level_switch(const PlaneTree& t);

}  // namespace avoid132
