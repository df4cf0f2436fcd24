#include "avoid132/plane_tree.hpp"

#include <algorithm>
#include <functional>

#include "avoid132/errors.hpp"

namespace avoid132 {

StatMultiset StatMultiset::of(std::vector<int> values) {
  std::sort(values.begin(), values.end());
  return StatMultiset{std::move(values)};
}

PlaneTree::PlaneTree() : children_(1), parent_{-1}, depth_{0}, child_index_{0} {}

void PlaneTree::index_from_children() {
  const std::size_t n = children_.size();
  parent_.assign(n, -1);
  depth_.assign(n, 0);
  child_index_.assign(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    const auto& kids = children_[v];
    for (std::size_t i = 0; i < kids.size(); ++i) {
      const auto c = static_cast<std::size_t>(kids[i]);
      parent_[c] = static_cast<int>(v);
      child_index_[c] = static_cast<int>(i);
    }
  }
  // Preorder numbering puts every parent before its children.
  for (std::size_t v = 1; v < n; ++v) depth_[v] = depth_[static_cast<std::size_t>(parent_[v])] + 1;
}

PlaneTree PlaneTree::parse(std::string_view word) {
  PlaneTree t;
  std::vector<int> open{0};
  for (std::size_t i = 0; i < word.size(); ++i) {
    const char c = word[i];
    if (c == '(') {
      const int v = static_cast<int>(t.children_.size());
      t.children_.emplace_back();
      t.children_[static_cast<std::size_t>(open.back())].push_back(v);
      open.push_back(v);
    } else if (c == ')') {
      if (open.size() == 1) throw ParseError("unmatched ')'", i);
      open.pop_back();
    } else {
      throw ParseError(std::string("unexpected character '") + c + "' in tree word", i);
    }
  }
  if (open.size() != 1) throw ParseError("unclosed '('", word.size());
  t.index_from_children();
  return t;
}

PlaneTree PlaneTree::join(const std::vector<PlaneTree>& subtrees) {
  std::string word;
  for (const auto& s : subtrees) word += "(" + s.to_text() + ")";
  return parse(word);
}

PlaneTree PlaneTree::path(int edges) { return parse(std::string(static_cast<std::size_t>(edges), '(') + std::string(static_cast<std::size_t>(edges), ')')); }

PlaneTree PlaneTree::star(int edges) {
  std::string word;
  for (int i = 0; i < edges; ++i) word += "()";
  return parse(word);
}

PlaneTree::Renumbered PlaneTree::from_child_lists(int root, const std::vector<std::vector<int>>& children) {
  Renumbered out;
  out.new_id.assign(children.size(), -1);
  std::vector<int> order;
  std::vector<int> stack{root};
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    if (out.new_id[static_cast<std::size_t>(v)] != -1) throw DomainError("child lists do not form a tree");
    out.new_id[static_cast<std::size_t>(v)] = static_cast<int>(order.size());
    order.push_back(v);
    const auto& kids = children[static_cast<std::size_t>(v)];
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
  }
  out.tree.children_.assign(order.size(), {});
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (int c : children[static_cast<std::size_t>(order[i])]) {
      out.tree.children_[i].push_back(out.new_id[static_cast<std::size_t>(c)]);
    }
  }
  out.tree.index_from_children();
  return out;
}

std::vector<int> PlaneTree::leaves() const {
  std::vector<int> out;
  for (int v = 1; v < vertex_count(); ++v) {
    if (is_leaf(v)) out.push_back(v);
  }
  return out;
}

int PlaneTree::vertex(const VertexRef& ref) const {
  int v = 0;
  for (int idx : ref.path) {
    const auto kids = children(v);
    if (idx < 0 || idx >= static_cast<int>(kids.size())) throw DomainError("vertex address outside tree");
    v = kids[static_cast<std::size_t>(idx)];
  }
  return v;
}

VertexRef PlaneTree::address(int v) const {
  VertexRef ref;
  for (int u = v; u != 0; u = parent(u)) ref.path.push_back(child_index(u));
  std::reverse(ref.path.begin(), ref.path.end());
  return ref;
}

std::string PlaneTree::to_text() const {
  std::string out;
  out.reserve(2 * static_cast<std::size_t>(edges()));
  std::function<void(int)> walk = [&](int v) {
    for (int c : children(v)) {
      out += '(';
      walk(c);
      out += ')';
    }
  };
  walk(0);
  return out;
}

std::strong_ordering operator<=>(const PlaneTree& a, const PlaneTree& b) { return a.to_text() <=> b.to_text(); }

void for_each_tree(int n, const std::function<void(const PlaneTree&)>& visit, Shard shard, EnumerationLimits limits) {
  if (n < 0) throw DomainError("enumeration size must be non-negative");
  if (n > limits.max_n) {
    throw ResourceLimitError("n = " + std::to_string(n) + " exceeds enumeration bound " + std::to_string(limits.max_n));
  }
  if (n == 0) {
    if (shard.owns(1)) visit(PlaneTree{});
    return;
  }
  std::string word(2 * static_cast<std::size_t>(n), ' ');
  std::function<void(std::size_t, int, int, bool)> extend = [&](std::size_t at, int opened, int depth, bool returned) {
    if (at == word.size()) {
      visit(PlaneTree::parse(word));
      return;
    }
    if (opened < n) {
      word[at] = '(';
      extend(at + 1, opened + 1, depth + 1, returned);
    }
    if (depth > 0) {
      word[at] = ')';
      if (!returned && depth == 1) {
        // First return to the root: prefix fixes the shard key.
        if (!shard.owns(static_cast<int>(at + 1) / 2)) return;
        extend(at + 1, opened, 0, true);
      } else {
        extend(at + 1, opened, depth - 1, returned);
      }
    }
  };
  extend(0, 0, 0, false);
}

std::vector<PlaneTree> enumerate_trees(int n, EnumerationLimits limits) {
  std::vector<PlaneTree> out;
  for_each_tree(n, [&](const PlaneTree& t) { out.push_back(t); }, {}, limits);
  return out;
}

StatMultiset heights(const PlaneTree& t) {
  std::vector<int> h;
  for (int v = 0; v < t.vertex_count(); ++v) h.push_back(t.depth(v));
  return StatMultiset::of(std::move(h));
}

int tree_height(const PlaneTree& t) {
  int best = 0;
  for (int v = 0; v < t.vertex_count(); ++v) best = std::max(best, t.depth(v));
  return best;
}

int rsw(const PlaneTree& t, int v) {
  if (v < 0 || v >= t.vertex_count()) throw DomainError("vertex outside tree");
  int width = t.outdegree(v);
  for (int u = v; u != 0; u = t.parent(u)) {
    width += t.outdegree(t.parent(u)) - t.child_index(u) - 1;
  }
  return width;
}

int rsw(const PlaneTree& t, const VertexRef& v) { return rsw(t, t.vertex(v)); }

StatMultiset rsw_multiset(const PlaneTree& t, Population population) {
  std::vector<int> out;
  for (int v = 0; v < t.vertex_count(); ++v) {
    const bool take = population == Population::kAll || (population == Population::kInternal && t.is_internal(v)) ||
                      (population == Population::kLeaves && t.is_leaf(v));
    if (take) out.push_back(rsw(t, v));
  }
  return StatMultiset::of(std::move(out));
}

StatMultiset leaf_heights(const PlaneTree& t) {
  std::vector<int> out;
  for (int v : t.leaves()) out.push_back(t.depth(v));
  return StatMultiset::of(std::move(out));
}

int rsw_tree(const PlaneTree& t) {
  if (t.edges() == 0) throw DomainError("rsw_tree requires at least one edge");
  int best = 0;
  for (int v = 0; v < t.vertex_count(); ++v) {
    if (t.is_internal(v)) best = std::max(best, rsw(t, v));
  }
  return best;
}

std::vector<int> left_path_lengths(const PlaneTree& t) {
  std::vector<bool> on_path(static_cast<std::size_t>(t.vertex_count()), false);
  on_path[0] = true;
  std::vector<int> out;
  for (int leaf : t.leaves()) {
    int length = 0;
    for (int u = leaf; !on_path[static_cast<std::size_t>(u)]; u = t.parent(u)) {
      on_path[static_cast<std::size_t>(u)] = true;
      ++length;
    }
    out.push_back(length);
  }
  return out;
}

LengthDistribution left_paths(const PlaneTree& t) { return LengthDistribution::from_lengths(left_path_lengths(t)); }

LengthDistribution right_paths(const PlaneTree& t) { return left_paths(mirror(t)); }

LengthDistribution internal_outdegrees(const PlaneTree& t) {
  std::vector<int> out;
  if (t.edges() == 0) return {};
  for (int v = 0; v < t.vertex_count(); ++v) {
    if (t.is_internal(v)) out.push_back(t.outdegree(v));
  }
  return LengthDistribution::from_lengths(std::move(out));
}

LevelProfile level_profile(const PlaneTree& t) {
  LevelProfile p;
  std::vector<int> even;
  for (int v = 0; v < t.vertex_count(); ++v) {
    if (t.depth(v) % 2 == 1) {
      p.odd_outdegrees.push_back(t.outdegree(v));
    } else {
      const int degree = t.outdegree(v) + (v == 0 ? 0 : 1);
      if (degree > 0) even.push_back(degree);
    }
  }
  std::sort(p.odd_outdegrees.begin(), p.odd_outdegrees.end(), std::greater<>());
  p.even_degrees = LengthDistribution::from_lengths(std::move(even));
  return p;
}

PlaneTree mirror(const PlaneTree& t) {
  std::vector<std::vector<int>> kids(static_cast<std::size_t>(t.vertex_count()));
  for (int v = 0; v < t.vertex_count(); ++v) {
    const auto c = t.children(v);
    kids[static_cast<std::size_t>(v)].assign(c.rbegin(), c.rend());
  }
  return PlaneTree::from_child_lists(0, kids).tree;
}

PlaneTree level_switch(const PlaneTree& t) {
  if (t.edges() == 0) throw DomainError("level_switch requires the root to have a child");
  std::vector<std::vector<int>> kids(static_cast<std::size_t>(t.vertex_count()));
  for (int v = 0; v < t.vertex_count(); ++v) {
    const auto c = t.children(v);
    kids[static_cast<std::size_t>(v)].assign(c.begin(), c.end());
  }
  const int lifted = kids[0].front();
  kids[0].erase(kids[0].begin());
  kids[static_cast<std::size_t>(lifted)].push_back(0);
  return PlaneTree::from_child_lists(lifted, kids).tree;
}

}  // namespace avoid132
