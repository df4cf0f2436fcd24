#pragma once

#include <string>

#include <json.hpp>

#include "avoid132/alternating.hpp"
#include "avoid132/bijections.hpp"
#include "avoid132/decomposition.hpp"
#include "avoid132/oracle.hpp"
#include "avoid132/plane_tree.hpp"

namespace avoid132 {

using Json = nlohmann::ordered_json;

Json to_json(const LengthDistribution& d);
/// {"kind", "segments": [[values...], ...], "distribution": [...]}
Json to_json(const Decomposition& d);
/// Statistics object with keys heights, leaf_heights, height, rsw (null for
/// the single vertex), rsw_all, rsw_internal, left_paths, right_paths,
/// internal_outdegrees, even_degrees, odd_outdegrees.
Json tree_stats_json(const PlaneTree& t);
/// Nested {"label", "children"}; the root's label is null.
Json to_json(const LabeledPlaneTree& t);

/// Nested {"label", "parity", "starred", "children"} nodes.
Json to_json(const SetAlternatingTree& t);
/// Throws ParseError on malformed documents.
SetAlternatingTree alt_tree_from_json(const Json& j);
/// {"trees": [node, ...]} where each node is a small tree in the format
/// above.
Json to_json(const SmallForest& f);
SmallForest forest_from_json(const Json& j);
/// Compact rendering such as "e3(o1(e1),o2)".
std::string to_text(const SetAlternatingTree& t);
std::string to_text(const SmallForest& f);

Json to_json(const Witness& w);
/// {"claim", "n", "checked", "failures", "status", "witnesses"}; no timing.
Json to_json(const VerificationReport& r);

}  // namespace avoid132
