#pragma once

#include <vector>

#include "avoid132/permutation.hpp"
#include "avoid132/plane_tree.hpp"

namespace avoid132 {

/// A plane tree with an integer label on every non-root vertex.
/// `labels[v]` belongs to vertex v (preorder id); labels[0] is 0.
struct LabeledPlaneTree {
  PlaneTree shape;
  std::vector<int> labels;

  /// Vertex carrying `label`, or -1.
  int vertex_of(int label) const;
  friend bool operator==(const LabeledPlaneTree&, const LabeledPlaneTree&) = default;
};

// Jani-Rieper ---------------------------------------------------------------

/// Labels non-root vertices n, n-1, ..., 1 in preorder.
LabeledPlaneTree jr_labels(const PlaneTree& t);

/// Reads the preorder-decreasing labels in postorder. The result avoids 132.
Permutation jr_tree_to_perm(const PlaneTree& t);

/// Inverse of jr_tree_to_perm, built from the increasing runs tau_1..tau_k:
/// tau_k hangs from the root as a path (maximum on top); then each earlier
/// run, right to left, hangs as the new leftmost branch below the smallest
/// vertex u on the current leftmost path with u > max(run), or below the
/// root when there is no such u. Labels are the run values that built each
/// vertex. Throws DomainError if pi contains 132.
LabeledPlaneTree jr_perm_to_labeled_tree(const Permutation& pi);
PlaneTree jr_perm_to_tree(const Permutation& pi);

// phi -----------------------------------------------------------------------

/// The v-CIS segment holding pi_1 becomes the root's children; any other
/// segment becomes the children of the element just before its first entry
/// in pi. Throws DomainError if pi contains 132.
LabeledPlaneTree phi_perm_to_tree(const Permutation& pi);

/// Canonical labels of a shape under phi: internal vertices in preorder hand
/// their k children the largest k unused values, increasing left to right.
LabeledPlaneTree phi_labels(const PlaneTree& t);

/// Preorder reading of phi_labels(t); inverse of phi_perm_to_tree.
Permutation phi_tree_to_perm(const PlaneTree& t);

}  // namespace avoid132
