#include "avoid132/bijections.hpp"

#include <algorithm>
#include <functional>

#include "avoid132/decomposition.hpp"
#include "avoid132/errors.hpp"

namespace avoid132 {

int LabeledPlaneTree::vertex_of(int label) const {
  for (std::size_t v = 1; v < labels.size(); ++v) {
    if (labels[v] == label) return static_cast<int>(v);
  }
  return -1;
}

namespace {

// Child lists keyed by label, with 0 standing for the root.
LabeledPlaneTree from_label_lists(const std::vector<std::vector<int>>& kids) {
  auto built = PlaneTree::from_child_lists(0, kids);
  LabeledPlaneTree out{std::move(built.tree), std::vector<int>(kids.size(), 0)};
  for (std::size_t label = 0; label < kids.size(); ++label) {
    const int v = built.new_id[label];
    if (v < 0) throw DomainError("construction left a label detached");
    out.labels[static_cast<std::size_t>(v)] = static_cast<int>(label);
  }
  return out;
}

void require_avoider(const Permutation& pi, const char* what) {
  if (!avoids_132(pi)) throw DomainError(std::string(what) + " is defined only for 132-avoiding permutations");
}

}  // namespace

LabeledPlaneTree jr_labels(const PlaneTree& t) {
  const int n = t.edges();
  LabeledPlaneTree out{t, std::vector<int>(static_cast<std::size_t>(n) + 1, 0)};
  for (int v = 1; v <= n; ++v) out.labels[static_cast<std::size_t>(v)] = n + 1 - v;
  return out;
}

Permutation jr_tree_to_perm(const PlaneTree& t) {
  const auto labelled = jr_labels(t);
  std::vector<int> word;
  word.reserve(static_cast<std::size_t>(t.edges()));
  std::function<void(int)> post = [&](int v) {
    for (int c : t.children(v)) post(c);
    if (v != 0) word.push_back(labelled.labels[static_cast<std::size_t>(v)]);
  };
  post(0);
  return Permutation(std::move(word));
}

LabeledPlaneTree jr_perm_to_labeled_tree(const Permutation& pi) {
  require_avoider(pi, "the inverse Jani-Rieper map");
  const int n = pi.size();
  std::vector<std::vector<int>> kids(static_cast<std::size_t>(n) + 1);
  const auto runs = ird(pi).segments;

  // Hangs run values as a descending path below `anchor`, as its leftmost child.
  auto hang = [&](int anchor, const std::vector<int>& run) {
    auto& slot = kids[static_cast<std::size_t>(anchor)];
    slot.insert(slot.begin(), run.back());
    for (std::size_t i = run.size() - 1; i > 0; --i) {
      kids[static_cast<std::size_t>(run[i])].push_back(run[i - 1]);
    }
  };

  for (auto it = runs.rbegin(); it != runs.rend(); ++it) {
    const auto& run = it->values;
    const int top = run.back();
    int anchor = 0;
    int best = n + 1;
    for (int u = 0; !kids[static_cast<std::size_t>(u)].empty();) {
      u = kids[static_cast<std::size_t>(u)].front();
      if (u > top && u < best) best = u;
    }
    if (best <= n) anchor = best;
    hang(anchor, run);
  }
  return from_label_lists(kids);
}

PlaneTree jr_perm_to_tree(const Permutation& pi) { return jr_perm_to_labeled_tree(pi).shape; }

LabeledPlaneTree phi_perm_to_tree(const Permutation& pi) {
  require_avoider(pi, "phi");
  const int n = pi.size();
  std::vector<std::vector<int>> kids(static_cast<std::size_t>(n) + 1);
  for (const auto& segment : vcis(pi).segments) {
    const int first = segment.positions.front();
    const int parent = first == 1 ? 0 : pi.at(first - 1);
    auto& slot = kids[static_cast<std::size_t>(parent)];
    slot.insert(slot.end(), segment.values.begin(), segment.values.end());
  }
  return from_label_lists(kids);
}

LabeledPlaneTree phi_labels(const PlaneTree& t) {
  LabeledPlaneTree out{t, std::vector<int>(static_cast<std::size_t>(t.vertex_count()), 0)};
  int next = t.edges();
  for (int v = 0; v < t.vertex_count(); ++v) {
    const auto kids = t.children(v);
    const int k = static_cast<int>(kids.size());
    for (int i = 0; i < k; ++i) out.labels[static_cast<std::size_t>(kids[static_cast<std::size_t>(i)])] = next - k + 1 + i;
    next -= k;
  }
  return out;
}

Permutation phi_tree_to_perm(const PlaneTree& t) {
  const auto labelled = phi_labels(t);
  return Permutation(std::vector<int>(labelled.labels.begin() + 1, labelled.labels.end()));
}

}  // namespace avoid132
