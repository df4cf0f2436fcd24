#pragma once

#include <compare>
#include <functional>
#include <string>
#include <vector>

#include "avoid132/permutation.hpp"
#include "avoid132/plane_tree.hpp"

namespace avoid132 {

enum class Parity { kE, kO };

/// A label drawn from E = [k] or O = [b+1], or one of the starred pools
/// (k+1)*, ... and (b+2)*, ... used as placeholders by the forest bijection.
struct AltLabel {
  Parity parity = Parity::kE;
  int value = 0;
  bool starred = false;

  std::string to_string() const;
  friend bool operator==(const AltLabel&, const AltLabel&) = default;
  /// Every E label precedes every O label; within a parity by value.
  friend auto operator<=>(const AltLabel&, const AltLabel&) = default;
};

/// Plane tree labelled on every vertex (root included) whose label parity
/// alternates level by level. An E-tree has an E root.
struct SetAlternatingTree {
  PlaneTree shape;
  std::vector<AltLabel> labels;

  bool is_e_tree() const { return labels.at(0).parity == Parity::kE; }
  friend bool operator==(const SetAlternatingTree&, const SetAlternatingTree&) = default;
};

/// A root and its leaf children (two levels). Size = number of leaves.
struct SmallTree {
  AltLabel root;
  std::vector<AltLabel> leaves;

  int size() const noexcept { return static_cast<int>(leaves.size()); }
  friend bool operator==(const SmallTree&, const SmallTree&) = default;
};

/// Unordered collection of small trees, stored sorted by root label so that
/// equality is multiset equality.
struct SmallForest {
  std::vector<SmallTree> trees;

  static SmallForest of(std::vector<SmallTree> trees);
  friend bool operator==(const SmallForest&, const SmallForest&) = default;
};

/// Parameters of a labelled set-alternating E-tree over E = [k], O = [b+1]
/// with root k: root degree d_r, l_e - 1 non-root even-level internal
/// vertices, l_o odd-level internal vertices.
struct AltTreeParams {
  int k = 0;
  int b = 0;
  int d_r = 0;
  int l_e = 0;
  int l_o = 0;
  friend bool operator==(const AltTreeParams&, const AltTreeParams&) = default;
};

/// Checks the hypotheses (alternation, E = [k] with root k, O = [b+1], no
/// starred labels) and returns the parameters. Throws DomainError.
AltTreeParams alt_tree_params(const SetAlternatingTree& t);

/// Repeatedly detaches the small tree of the minimal internal vertex whose
/// children are all leaves, leaving the next starred label of its parity
/// ((k+1)*, (k+2)*, ... or (b+2)*, (b+3)*, ...) in its place, until only a
/// small E-tree remains.
SmallForest alt_tree_to_forest(const SetAlternatingTree& t);

/// Conditions on a forest, each message prefixed with the condition it
/// breaks ("(a)", "(b)", "(c)" or "labels"). Empty iff the forest is a valid
/// image of alt_tree_to_forest.
std::vector<std::string> forest_violations(const SmallForest& f);

/// Inverse of alt_tree_to_forest: repeatedly merges the root of the
/// starless small tree with the minimal root into the minimal remaining
/// starred label of the same parity. Throws DomainError naming the violated
/// condition.
SetAlternatingTree forest_to_alt_tree(const SmallForest& f);

/// Every labelled set-alternating E-tree with 1..max_edges edges, root k,
/// even levels labelled by [k] and odd levels by [b+1], subject to
/// k <= max_e and b+1 <= max_o. Sharded by the first return of the shape.
void for_each_alt_tree(int max_edges, int max_e, int max_o,
                       const std::function<void(const SetAlternatingTree&)>& visit, Shard shard = {});

}  // namespace avoid132
