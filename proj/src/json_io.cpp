#include "avoid132/json_io.hpp"

#include "avoid132/errors.hpp"

namespace avoid132 {

namespace {

Json label_node(const AltLabel& label) {
  Json node;
  node["label"] = label.value;
  node["parity"] = label.parity == Parity::kE ? "E" : "O";
  node["starred"] = label.starred;
  node["children"] = Json::array();
  return node;
}

Json alt_subtree(const SetAlternatingTree& t, int v) {
  Json node = label_node(t.labels[static_cast<std::size_t>(v)]);
  for (int c : t.shape.children(v)) node["children"].push_back(alt_subtree(t, c));
  return node;
}

AltLabel label_from_json(const Json& node) {
  if (!node.is_object() || !node.contains("label") || !node.contains("parity")) {
    throw ParseError("alternating tree node needs \"label\" and \"parity\"", 0);
  }
  const Json& label = node["label"];
  const Json& parity = node["parity"];
  if (!label.is_number_integer() || label.get<int>() < 1) throw ParseError("\"label\" must be a positive integer", 0);
  if (!parity.is_string() || (parity != "E" && parity != "O")) throw ParseError("\"parity\" must be \"E\" or \"O\"", 0);
  bool starred = false;
  if (node.contains("starred")) {
    if (!node["starred"].is_boolean()) throw ParseError("\"starred\" must be a boolean", 0);
    starred = node["starred"].get<bool>();
  }
  return AltLabel{parity == "E" ? Parity::kE : Parity::kO, label.get<int>(), starred};
}

const Json& children_of(const Json& node) {
  static const Json kEmpty = Json::array();
  if (!node.contains("children")) return kEmpty;
  if (!node["children"].is_array()) throw ParseError("\"children\" must be an array", 0);
  return node["children"];
}

void collect(const Json& node, int id, std::vector<std::vector<int>>& children, std::vector<AltLabel>& labels) {
  labels.push_back(label_from_json(node));
  for (const Json& child : children_of(node)) {
    const int cid = static_cast<int>(labels.size());
    children[static_cast<std::size_t>(id)].push_back(cid);
    children.emplace_back();
    collect(child, cid, children, labels);
  }
}

std::string text_of(const SetAlternatingTree& t, int v) {
  std::string out = t.labels[static_cast<std::size_t>(v)].to_string();
  const auto kids = t.shape.children(v);
  if (kids.empty()) return out;
  out += '(';
  for (std::size_t i = 0; i < kids.size(); ++i) {
    if (i != 0) out += ',';
    out += text_of(t, kids[i]);
  }
  return out + ')';
}

Json labeled_subtree(const LabeledPlaneTree& t, int v) {
  Json node;
  node["label"] = v == 0 ? Json(nullptr) : Json(t.labels[static_cast<std::size_t>(v)]);
  node["children"] = Json::array();
  for (int c : t.shape.children(v)) node["children"].push_back(labeled_subtree(t, c));
  return node;
}

}  // namespace

Json to_json(const LengthDistribution& d) { return Json(d.parts()); }

Json to_json(const Decomposition& d) {
  Json out;
  out["kind"] = std::string(to_string(d.kind));
  out["segments"] = Json::array();
  for (const auto& s : d.segments) out["segments"].push_back(s.values);
  out["distribution"] = to_json(length_distribution(d));
  return out;
}

Json tree_stats_json(const PlaneTree& t) {
  Json out;
  out["heights"] = heights(t).values;
  out["leaf_heights"] = leaf_heights(t).values;
  out["height"] = tree_height(t);
  out["rsw"] = t.edges() == 0 ? Json(nullptr) : Json(rsw_tree(t));
  out["rsw_all"] = rsw_multiset(t, Population::kAll).values;
  out["rsw_internal"] = rsw_multiset(t, Population::kInternal).values;
  out["left_paths"] = to_json(left_paths(t));
  out["right_paths"] = to_json(right_paths(t));
  out["internal_outdegrees"] = to_json(internal_outdegrees(t));
  const auto profile = level_profile(t);
  out["even_degrees"] = to_json(profile.even_degrees);
  out["odd_outdegrees"] = profile.odd_outdegrees;
  return out;
}

Json to_json(const LabeledPlaneTree& t) { return labeled_subtree(t, 0); }

Json to_json(const SetAlternatingTree& t) { return alt_subtree(t, 0); }

SetAlternatingTree alt_tree_from_json(const Json& j) {
  std::vector<std::vector<int>> children(1);
  std::vector<AltLabel> labels;
  collect(j, 0, children, labels);
  auto renumbered = PlaneTree::from_child_lists(0, children);
  SetAlternatingTree out{std::move(renumbered.tree), std::vector<AltLabel>(labels.size())};
  for (std::size_t old = 0; old < labels.size(); ++old) {
    out.labels[static_cast<std::size_t>(renumbered.new_id[old])] = labels[old];
  }
  return out;
}

Json to_json(const SmallForest& f) {
  Json out;
  out["trees"] = Json::array();
  for (const auto& tree : f.trees) {
    Json node = label_node(tree.root);
    for (const auto& leaf : tree.leaves) node["children"].push_back(label_node(leaf));
    out["trees"].push_back(std::move(node));
  }
  return out;
}

SmallForest forest_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("trees") || !j["trees"].is_array()) {
    throw ParseError("forest document needs a \"trees\" array", 0);
  }
  std::vector<SmallTree> trees;
  for (const Json& node : j["trees"]) {
    SmallTree tree{label_from_json(node), {}};
    for (const Json& leaf : children_of(node)) {
      if (!children_of(leaf).empty()) throw ParseError("small trees have exactly two levels", 0);
      tree.leaves.push_back(label_from_json(leaf));
    }
    trees.push_back(std::move(tree));
  }
  return SmallForest::of(std::move(trees));
}

std::string to_text(const SetAlternatingTree& t) { return text_of(t, 0); }

std::string to_text(const SmallForest& f) {
  std::string out;
  for (std::size_t i = 0; i < f.trees.size(); ++i) {
    if (i != 0) out += ' ';
    out += f.trees[i].root.to_string() + '(';
    for (std::size_t c = 0; c < f.trees[i].leaves.size(); ++c) {
      if (c != 0) out += ',';
      out += f.trees[i].leaves[c].to_string();
    }
    out += ')';
  }
  return out;
}

Json to_json(const Witness& w) {
  Json out;
  out["n"] = w.n;
  out["object"] = w.object;
  out["detail"] = w.detail;
  out["replay"] = w.replay;
  return out;
}

Json to_json(const VerificationReport& r) {
  Json out;
  out["claim"] = r.claim;
  out["n"] = r.n;
  out["checked"] = r.checked;
  out["failures"] = r.failures;
  out["status"] = r.pass() ? "pass" : "fail";
  out["witnesses"] = Json::array();
  for (const auto& w : r.witnesses) out["witnesses"].push_back(to_json(w));
  return out;
}

}  // namespace avoid132
