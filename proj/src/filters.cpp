#include "avoid132/filters.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>

#include "avoid132/decomposition.hpp"
#include "avoid132/errors.hpp"

namespace avoid132 {

namespace {

enum class ValueKind { kInteger, kPartition, kMultiset };

template <class Object>
struct Statistic {
  ValueKind kind;
  std::function<std::string(const Object&)> compute;
};

std::string join(const std::vector<int>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(xs[i]);
  }
  return out;
}

std::string partition_text(const Decomposition& d) { return length_distribution(d).to_string(); }

int max_part(const std::vector<Segment>& segments, std::size_t from, std::size_t to) {
  int m = 0;
  for (std::size_t i = from; i < to; ++i) m = std::max(m, segments[i].size());
  return m;
}

// Keys "consec<k>" and "rundrops<k>" carry the pattern length in the name.
bool pattern_key(std::string_view key, std::string_view prefix, int& k) {
  if (!key.starts_with(prefix)) return false;
  const auto digits = key.substr(prefix.size());
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
  return ec == std::errc{} && ptr == digits.data() + digits.size() && !digits.empty() && k >= 3;
}

const std::map<std::string, Statistic<Permutation>, std::less<>>& permutation_statistics() {
  using P = const Permutation&;
  static const std::map<std::string, Statistic<Permutation>, std::less<>> table{
      {"ird-dist", {ValueKind::kPartition, [](P p) { return partition_text(ird(p)); }}},
      {"drd-dist", {ValueKind::kPartition, [](P p) { return partition_text(drd(p)); }}},
      {"vcis-dist", {ValueKind::kPartition, [](P p) { return partition_text(vcis(p)); }}},
      {"lde-dist", {ValueKind::kPartition, [](P p) { return partition_text(lde(p)); }}},
      {"descents", {ValueKind::kInteger, [](P p) { return std::to_string(descent_set(p).size()); }}},
      {"ascents", {ValueKind::kInteger, [](P p) { return std::to_string(ascent_set(p).size()); }}},
      {"first", {ValueKind::kInteger, [](P p) { return std::to_string(p.at(1)); }}},
      {"last", {ValueKind::kInteger, [](P p) { return std::to_string(p.at(p.size())); }}},
      {"ir-count", {ValueKind::kInteger, [](P p) { return std::to_string(ird(p).segments.size()); }}},
      {"ir-last", {ValueKind::kInteger, [](P p) { return std::to_string(ird(p).segments.back().size()); }}},
      {"ir-max-other",
       {ValueKind::kInteger,
        [](P p) {
          const auto segs = ird(p).segments;
          return std::to_string(max_part(segs, 0, segs.size() - 1));
        }}},
      {"lde-count", {ValueKind::kInteger, [](P p) { return std::to_string(lde(p).segments.size()); }}},
      {"lde-max",
       {ValueKind::kInteger,
        [](P p) {
          const auto segs = lde(p).segments;
          return std::to_string(max_part(segs, 0, segs.size()));
        }}},
  };
  return table;
}

StatMultiset odd_outdegrees(const PlaneTree& t) { return StatMultiset::of(level_profile(t).odd_outdegrees); }

std::vector<int> level_outdegrees(const PlaneTree& t, int parity) {
  std::vector<int> out;
  for (int v = 0; v < t.vertex_count(); ++v) {
    if (t.depth(v) % 2 == parity) out.push_back(t.outdegree(v));
  }
  return out;
}

const std::map<std::string, Statistic<PlaneTree>, std::less<>>& tree_statistics() {
  using T = const PlaneTree&;
  const auto count_if_vertex = [](T t, bool leaf) {
    int c = 0;
    for (int v = 0; v < t.vertex_count(); ++v) c += t.is_leaf(v) == leaf ? 1 : 0;
    return std::to_string(c);
  };
  const auto max_of = [](const std::vector<int>& xs) {
    return std::to_string(xs.empty() ? 0 : *std::max_element(xs.begin(), xs.end()));
  };
  static const std::map<std::string, Statistic<PlaneTree>, std::less<>> table{
      {"heights", {ValueKind::kMultiset, [](T t) { return join(heights(t).values); }}},
      {"leaf-heights", {ValueKind::kMultiset, [](T t) { return join(leaf_heights(t).values); }}},
      {"rsw-all", {ValueKind::kMultiset, [](T t) { return join(rsw_multiset(t, Population::kAll).values); }}},
      {"rsw-internal",
       {ValueKind::kMultiset, [](T t) { return join(rsw_multiset(t, Population::kInternal).values); }}},
      {"leaves", {ValueKind::kInteger, [count_if_vertex](T t) { return count_if_vertex(t, true); }}},
      {"internal", {ValueKind::kInteger, [count_if_vertex](T t) { return count_if_vertex(t, false); }}},
      {"height", {ValueKind::kInteger, [](T t) { return std::to_string(tree_height(t)); }}},
      {"rsw", {ValueKind::kInteger, [](T t) { return std::to_string(rsw_tree(t)); }}},
      {"internal-outdegrees", {ValueKind::kPartition, [](T t) { return internal_outdegrees(t).to_string(); }}},
      {"left-paths", {ValueKind::kPartition, [](T t) { return left_paths(t).to_string(); }}},
      {"right-paths", {ValueKind::kPartition, [](T t) { return right_paths(t).to_string(); }}},
      {"even-degrees", {ValueKind::kPartition, [](T t) { return level_profile(t).even_degrees.to_string(); }}},
      {"odd-outdegrees", {ValueKind::kMultiset, [](T t) { return join(odd_outdegrees(t).values); }}},
      {"odd-outdegrees-plus-one",
       {ValueKind::kPartition,
        [](T t) {
          auto xs = level_profile(t).odd_outdegrees;
          for (auto& x : xs) ++x;
          return LengthDistribution::from_lengths(std::move(xs)).to_string();
        }}},
      {"even-count", {ValueKind::kInteger, [](T t) { return std::to_string(level_outdegrees(t, 0).size()); }}},
      {"odd-count", {ValueKind::kInteger, [](T t) { return std::to_string(level_outdegrees(t, 1).size()); }}},
      {"even-max-outdegree", {ValueKind::kInteger, [max_of](T t) { return max_of(level_outdegrees(t, 0)); }}},
      {"odd-max-outdegree", {ValueKind::kInteger, [max_of](T t) { return max_of(level_outdegrees(t, 1)); }}},
  };
  return table;
}

ValueKind permutation_value_kind(std::string_view key) {
  int k = 0;
  if (pattern_key(key, "consec", k) || pattern_key(key, "rundrops", k)) return ValueKind::kInteger;
  const auto& table = permutation_statistics();
  const auto it = table.find(key);
  if (it == table.end()) throw ParseError("unknown permutation statistic '" + std::string(key) + "'", 0);
  return it->second.kind;
}

ValueKind tree_value_kind(std::string_view key) {
  const auto& table = tree_statistics();
  const auto it = table.find(key);
  if (it == table.end()) throw ParseError("unknown tree statistic '" + std::string(key) + "'", 0);
  return it->second.kind;
}

std::vector<int> parse_int_list(std::string_view text, std::size_t offset) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const auto token = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    int x = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), x);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size() || x < 0) {
      throw ParseError("expected a comma separated list of non-negative integers", offset + pos);
    }
    out.push_back(x);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::string canonical_value(ValueKind kind, std::string_view text, std::size_t offset) {
  auto xs = parse_int_list(text, offset);
  switch (kind) {
    case ValueKind::kInteger:
      if (xs.size() != 1) throw ParseError("expected a single integer", offset);
      return std::to_string(xs.front());
    case ValueKind::kPartition:
      std::sort(xs.begin(), xs.end(), std::greater<>());
      return join(xs);
    case ValueKind::kMultiset:
      std::sort(xs.begin(), xs.end());
      return join(xs);
  }
  return {};
}

bool compare(FilterOp op, const std::string& actual, const std::string& wanted) {
  if (op == FilterOp::kEq) return actual == wanted;
  const long a = std::stol(actual);
  const long w = std::stol(wanted);
  return op == FilterOp::kLe ? a <= w : a >= w;
}

}  // namespace

std::string FilterSpec::to_string() const {
  const char* sep = op == FilterOp::kEq ? "=" : op == FilterOp::kLe ? "<=" : ">=";
  return key + sep + value;
}

std::vector<std::string> filter_keys(ObjectKind kind) {
  std::vector<std::string> keys;
  if (kind == ObjectKind::kPermutation) {
    for (const auto& [k, _] : permutation_statistics()) keys.push_back(k);
    keys.emplace_back("consec<k>");
    keys.emplace_back("rundrops<k>");
  } else {
    for (const auto& [k, _] : tree_statistics()) keys.push_back(k);
  }
  return keys;
}

FilterSpec parse_filter(std::string_view text, ObjectKind kind) {
  const auto eq = text.find('=');
  if (eq == std::string_view::npos || eq == 0) throw ParseError("filter must look like key=value", 0);
  FilterSpec spec;
  std::size_t key_end = eq;
  if (text[eq - 1] == '<' || text[eq - 1] == '>') {
    spec.op = text[eq - 1] == '<' ? FilterOp::kLe : FilterOp::kGe;
    key_end = eq - 1;
  }
  spec.key = std::string(text.substr(0, key_end));
  const ValueKind vk = kind == ObjectKind::kPermutation ? permutation_value_kind(spec.key) : tree_value_kind(spec.key);
  if (spec.op != FilterOp::kEq && vk != ValueKind::kInteger) {
    throw ParseError("order comparison on non-integer statistic '" + spec.key + "'", key_end);
  }
  spec.value = canonical_value(vk, text.substr(eq + 1), eq + 1);
  return spec;
}

std::string statistic(const Permutation& pi, std::string_view key) {
  int k = 0;
  if (pattern_key(key, "consec", k)) return std::to_string(consecutive_occurrences(pi, rising_drop_pattern(k)));
  if (pattern_key(key, "rundrops", k)) return std::to_string(maximal_run_drop_count(pi, k));
  const auto& table = permutation_statistics();
  const auto it = table.find(key);
  if (it == table.end()) throw ParseError("unknown permutation statistic '" + std::string(key) + "'", 0);
  if (pi.empty()) throw DomainError("statistic '" + std::string(key) + "' is undefined for the empty permutation");
  return it->second.compute(pi);
}

std::string statistic(const PlaneTree& t, std::string_view key) {
  const auto& table = tree_statistics();
  const auto it = table.find(key);
  if (it == table.end()) throw ParseError("unknown tree statistic '" + std::string(key) + "'", 0);
  return it->second.compute(t);
}

bool matches(const Permutation& pi, const std::vector<FilterSpec>& filters) {
  return std::all_of(filters.begin(), filters.end(),
                     [&](const FilterSpec& f) { return compare(f.op, statistic(pi, f.key), f.value); });
}

bool matches(const PlaneTree& t, const std::vector<FilterSpec>& filters) {
  return std::all_of(filters.begin(), filters.end(),
                     [&](const FilterSpec& f) { return compare(f.op, statistic(t, f.key), f.value); });
}

}  // namespace avoid132
