#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "avoid132/permutation.hpp"
#include "avoid132/plane_tree.hpp"

namespace avoid132 {

enum class ObjectKind { kPermutation, kTree };

enum class FilterOp { kEq, kLe, kGe };

/// One `key=value` (or `key<=value`, `key>=value`) constraint with the value
/// in canonical form, so that matching is plain string or integer comparison.
struct FilterSpec {
  std::string key;
  FilterOp op = FilterOp::kEq;
  std::string value;

  std::string to_string() const;
  friend bool operator==(const FilterSpec&, const FilterSpec&) = default;
};

/// Statistic names accepted for the given object kind.
std::vector<std::string> filter_keys(ObjectKind kind);

/// Parses and canonicalizes a filter. Partition-valued statistics sort
/// their parts non-increasingly, multiset-valued ones non-decreasingly.
/// Order comparisons are only allowed on integer statistics. Throws
/// ParseError on unknown keys or malformed values.
FilterSpec parse_filter(std::string_view text, ObjectKind kind);

/// Canonical string value of a statistic. Throws ParseError on an unknown
/// key and DomainError where the statistic is undefined (e.g. descents of
/// the empty permutation).
std::string statistic(const Permutation& pi, std::string_view key);
std::string statistic(const PlaneTree& t, std::string_view key);

bool matches(const Permutation& pi, const std::vector<FilterSpec>& filters);
bool matches(const PlaneTree& t, const std::vector<FilterSpec>& filters);

}  // namespace avoid132
