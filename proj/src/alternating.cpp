#include "avoid132/alternating.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>

#include "avoid132/errors.hpp"

namespace avoid132 {

std::string AltLabel::to_string() const {
  return std::string(parity == Parity::kE ? "e" : "o") + std::to_string(value) + (starred ? "*" : "");
}

SmallForest SmallForest::of(std::vector<SmallTree> trees) {
  std::sort(trees.begin(), trees.end(), [](const SmallTree& a, const SmallTree& b) { return a.root < b.root; });
  return SmallForest{std::move(trees)};
}

AltTreeParams alt_tree_params(const SetAlternatingTree& t) {
  const auto& shape = t.shape;
  if (static_cast<int>(t.labels.size()) != shape.vertex_count()) throw DomainError("label count does not match tree");
  if (!t.is_e_tree()) throw DomainError("root must carry an E label");

  std::vector<int> evens;
  std::vector<int> odds;
  for (int v = 0; v < shape.vertex_count(); ++v) {
    const auto& label = t.labels[static_cast<std::size_t>(v)];
    if (label.starred) throw DomainError("starred label " + label.to_string() + " inside a tree");
    const Parity expected = shape.depth(v) % 2 == 0 ? Parity::kE : Parity::kO;
    if (label.parity != expected) throw DomainError("label " + label.to_string() + " breaks level alternation");
    (expected == Parity::kE ? evens : odds).push_back(label.value);
  }
  auto is_range = [](std::vector<int> values) {
    std::sort(values.begin(), values.end());
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (values[i] != static_cast<int>(i) + 1) return false;
    }
    return true;
  };
  AltTreeParams p;
  p.k = static_cast<int>(evens.size());
  p.b = static_cast<int>(odds.size()) - 1;
  if (!is_range(evens)) throw DomainError("even-level labels must be exactly 1..k");
  if (odds.empty() || !is_range(odds)) throw DomainError("odd-level labels must be exactly 1..b+1");
  if (t.labels[0].value != p.k) throw DomainError("root label must be k = " + std::to_string(p.k));

  p.d_r = shape.outdegree(0);
  p.l_e = 1;
  for (int v = 1; v < shape.vertex_count(); ++v) {
    if (shape.outdegree(v) == 0) continue;
    if (shape.depth(v) % 2 == 0) {
      ++p.l_e;
    } else {
      ++p.l_o;
    }
  }
  return p;
}

SmallForest alt_tree_to_forest(const SetAlternatingTree& t) {
  const auto params = alt_tree_params(t);
  const auto& shape = t.shape;
  auto labels = t.labels;
  std::vector<std::vector<int>> kids(static_cast<std::size_t>(shape.vertex_count()));
  for (int v = 0; v < shape.vertex_count(); ++v) {
    const auto c = shape.children(v);
    kids[static_cast<std::size_t>(v)].assign(c.begin(), c.end());
  }
  auto is_leaf = [&](int v) { return kids[static_cast<std::size_t>(v)].empty(); };
  auto small_tree = [&](int v) {
    SmallTree s{labels[static_cast<std::size_t>(v)], {}};
    for (int c : kids[static_cast<std::size_t>(v)]) s.leaves.push_back(labels[static_cast<std::size_t>(c)]);
    return s;
  };

  std::vector<SmallTree> out;
  int next_e = params.k + 1;
  int next_o = params.b + 2;
  while (!std::all_of(kids[0].begin(), kids[0].end(), is_leaf)) {
    std::optional<int> pick;
    for (int v = 1; v < shape.vertex_count(); ++v) {
      const auto& c = kids[static_cast<std::size_t>(v)];
      if (c.empty() || !std::all_of(c.begin(), c.end(), is_leaf)) continue;
      if (!pick || labels[static_cast<std::size_t>(v)] < labels[static_cast<std::size_t>(*pick)]) pick = v;
    }
    const int v = *pick;
    out.push_back(small_tree(v));
    kids[static_cast<std::size_t>(v)].clear();
    auto& slot = labels[static_cast<std::size_t>(v)];
    slot = slot.parity == Parity::kE ? AltLabel{Parity::kE, next_e++, true} : AltLabel{Parity::kO, next_o++, true};
  }
  out.push_back(small_tree(0));
  return SmallForest::of(std::move(out));
}

std::vector<std::string> forest_violations(const SmallForest& f) {
  std::vector<std::string> problems;
  if (f.trees.empty()) return {"(a) forest is empty"};

  std::map<AltLabel, int> seen;
  int l_e = 0;
  int l_o = 0;
  for (const auto& tree : f.trees) {
    if (tree.root.starred) problems.push_back("labels: root " + tree.root.to_string() + " is starred");
    if (tree.leaves.empty()) problems.push_back("labels: tree rooted at " + tree.root.to_string() + " has no leaves");
    (tree.root.parity == Parity::kE ? l_e : l_o) += 1;
    ++seen[tree.root];
    for (const auto& leaf : tree.leaves) {
      if (leaf.parity == tree.root.parity) {
        problems.push_back("labels: leaf " + leaf.to_string() + " has the parity of its root " + tree.root.to_string());
      }
      ++seen[leaf];
    }
  }
  for (const auto& [label, count] : seen) {
    if (count > 1) problems.push_back("labels: " + label.to_string() + " used " + std::to_string(count) + " times");
  }

  auto pool = [&](Parity parity, bool starred) {
    std::vector<int> values;
    for (const auto& [label, count] : seen) {
      if (label.parity == parity && label.starred == starred) values.push_back(label.value);
    }
    return values;
  };
  auto is_run = [](const std::vector<int>& values, int from) {
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (values[i] != from + static_cast<int>(i)) return false;
    }
    return true;
  };

  const auto e_plain = pool(Parity::kE, false);
  const auto o_plain = pool(Parity::kO, false);
  const int k = static_cast<int>(e_plain.size());
  const int b = static_cast<int>(o_plain.size()) - 1;
  if (!is_run(e_plain, 1)) problems.push_back("labels: unstarred E labels are not 1..k");
  if (o_plain.empty() || !is_run(o_plain, 1)) problems.push_back("labels: unstarred O labels are not 1..b+1");

  const AltLabel root_k{Parity::kE, k, false};
  const auto root_tree =
      std::find_if(f.trees.begin(), f.trees.end(), [&](const SmallTree& s) { return s.root == root_k; });
  if (l_e < 1 || root_tree == f.trees.end()) problems.push_back("(a) no small E-tree rooted at k = " + std::to_string(k));

  const auto e_star = pool(Parity::kE, true);
  if (static_cast<int>(e_star.size()) != l_e - 1 || !is_run(e_star, k + 1)) {
    problems.push_back("(a) starred E labels must be (k+1)*..(k+l_e-1)*");
  }
  const auto o_star = pool(Parity::kO, true);
  if (static_cast<int>(o_star.size()) != l_o || !is_run(o_star, b + 2)) {
    problems.push_back("(c) starred O labels must be (b+2)*..(b+1+l_o)*");
  }
  if (l_o > 0 && root_tree != f.trees.end()) {
    const AltLabel last{Parity::kO, b + 1 + l_o, true};
    if (std::find(root_tree->leaves.begin(), root_tree->leaves.end(), last) == root_tree->leaves.end()) {
      problems.push_back("(b) " + last.to_string() + " is not a leaf of the tree rooted at k");
    }
  }
  return problems;
}

SetAlternatingTree forest_to_alt_tree(const SmallForest& f) {
  if (const auto problems = forest_violations(f); !problems.empty()) {
    std::string msg = "forest violates ";
    for (std::size_t i = 0; i < problems.size(); ++i) msg += (i ? "; " : "") + problems[i];
    throw DomainError(msg);
  }

  std::vector<AltLabel> labels;
  std::vector<std::vector<int>> kids;
  std::vector<int> active;
  for (const auto& tree : f.trees) {
    const int root = static_cast<int>(labels.size());
    labels.push_back(tree.root);
    kids.emplace_back();
    active.push_back(root);
    for (const auto& leaf : tree.leaves) {
      kids[static_cast<std::size_t>(root)].push_back(static_cast<int>(labels.size()));
      labels.push_back(leaf);
      kids.emplace_back();
    }
  }

  std::function<bool(int)> starless = [&](int v) {
    if (labels[static_cast<std::size_t>(v)].starred) return false;
    const auto& c = kids[static_cast<std::size_t>(v)];
    return std::all_of(c.begin(), c.end(), starless);
  };
  std::function<void(int, std::vector<int>&)> collect = [&](int v, std::vector<int>& out) {
    out.push_back(v);
    for (int c : kids[static_cast<std::size_t>(v)]) collect(c, out);
  };

  while (active.size() > 1) {
    std::optional<std::size_t> pick;
    for (std::size_t i = 0; i < active.size(); ++i) {
      if (!starless(active[i])) continue;
      if (!pick || labels[static_cast<std::size_t>(active[i])] < labels[static_cast<std::size_t>(active[*pick])]) pick = i;
    }
    if (!pick) throw DomainError("(a)/(c) every remaining small tree holds a starred label");
    const int root = active[*pick];
    const AltLabel root_label = labels[static_cast<std::size_t>(root)];

    std::optional<int> slot;
    for (std::size_t i = 0; i < active.size(); ++i) {
      if (i == *pick) continue;
      std::vector<int> members;
      collect(active[i], members);
      for (int v : members) {
        const auto& l = labels[static_cast<std::size_t>(v)];
        if (l.starred && l.parity == root_label.parity && (!slot || l < labels[static_cast<std::size_t>(*slot)])) slot = v;
      }
    }
    if (!slot) {
      throw DomainError(std::string(root_label.parity == Parity::kE ? "(a)" : "(c)") + " no starred slot left for " +
                        root_label.to_string());
    }
    labels[static_cast<std::size_t>(*slot)] = root_label;
    kids[static_cast<std::size_t>(*slot)] = kids[static_cast<std::size_t>(root)];
    kids[static_cast<std::size_t>(root)].clear();
    active.erase(active.begin() + static_cast<std::ptrdiff_t>(*pick));
  }

  auto built = PlaneTree::from_child_lists(active.front(), kids);
  const auto vertex_count = static_cast<std::size_t>(built.tree.vertex_count());
  SetAlternatingTree out{std::move(built.tree), std::vector<AltLabel>(vertex_count)};
  for (std::size_t old = 0; old < labels.size(); ++old) {
    const int v = built.new_id[old];
    if (v >= 0) out.labels[static_cast<std::size_t>(v)] = labels[old];
  }
  alt_tree_params(out);  // (b): the merge must end in an E-tree rooted at k
  return out;
}

void for_each_alt_tree(int max_edges, int max_e, int max_o,
                       const std::function<void(const SetAlternatingTree&)>& visit, Shard shard) {
  for (int edges = 1; edges <= max_edges; ++edges) {
    for_each_tree(
        edges,
        [&](const PlaneTree& shape) {
          std::vector<int> even_vertices;
          std::vector<int> odd_vertices;
          for (int v = 1; v < shape.vertex_count(); ++v) (shape.depth(v) % 2 == 0 ? even_vertices : odd_vertices).push_back(v);
          const int k = static_cast<int>(even_vertices.size()) + 1;
          const int o = static_cast<int>(odd_vertices.size());
          if (k > max_e || o > max_o) return;

          SetAlternatingTree t{shape, std::vector<AltLabel>(static_cast<std::size_t>(shape.vertex_count()))};
          t.labels[0] = AltLabel{Parity::kE, k, false};
          std::vector<int> e_values(static_cast<std::size_t>(k - 1));
          std::iota(e_values.begin(), e_values.end(), 1);
          do {
            for (std::size_t i = 0; i < even_vertices.size(); ++i) {
              t.labels[static_cast<std::size_t>(even_vertices[i])] = AltLabel{Parity::kE, e_values[i], false};
            }
            std::vector<int> o_values(static_cast<std::size_t>(o));
            std::iota(o_values.begin(), o_values.end(), 1);
            do {
              for (std::size_t i = 0; i < odd_vertices.size(); ++i) {
                t.labels[static_cast<std::size_t>(odd_vertices[i])] = AltLabel{Parity::kO, o_values[i], false};
              }
              visit(t);
            } while (std::next_permutation(o_values.begin(), o_values.end()));
          } while (std::next_permutation(e_values.begin(), e_values.end()));
        },
        shard, EnumerationLimits{.max_n = std::max(max_edges, kDefaultEnumerationBound)});
  }
}

}  // namespace avoid132
