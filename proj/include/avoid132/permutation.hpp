#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace avoid132 {

/// A permutation of 1..n in one-line notation. Immutable once built.
class Permutation {
 public:
  Permutation() = default;
  /// Throws DomainError unless `values` is a rearrangement of 1..n.
  explicit Permutation(std::vector<int> values);
  Permutation(std::initializer_list<int> values);

  /// Parses whitespace- or comma-separated values ("5 3 4 6 1 2 7").
  /// A single token of two or more digits is read digit by digit
  /// ("5346127"), which is unambiguous because no one-element
  /// permutation has a multi-digit value. Throws ParseError.
  static Permutation parse(std::string_view text);

  /// Reverse identity n(n-1)...1 and identity 12...n.
  static Permutation identity(int n);
  static Permutation reverse_identity(int n);

  int size() const noexcept { return static_cast<int>(values_.size()); }
  bool empty() const noexcept { return values_.empty(); }

  /// 0-based access.
  int operator[](std::size_t i) const { return values_[i]; }
  /// 1-based access, matching position conventions used throughout.
  int at(int position) const { return values_.at(static_cast<std::size_t>(position - 1)); }

  std::span<const int> values() const noexcept { return values_; }

  /// 1-based position of value v.
  int position_of(int v) const;

  /// Canonical text form: values separated by single spaces.
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> values_;
};

using PatternWord = Permutation;

/// Strictly increasing 1-based positions.
struct IndexSet {
  std::vector<int> positions;

  int size() const noexcept { return static_cast<int>(positions.size()); }
  bool contains(int position) const;
  friend bool operator==(const IndexSet&, const IndexSet&) = default;
};

/// True iff some subsequence of `pi` is order-isomorphic to `tau`.
/// Backtracking search over index tuples; exponential in |tau|.
bool contains_pattern(const Permutation& pi, const PatternWord& tau);

/// Single right-to-left pass with a monotone stack.
bool avoids_132(const Permutation& pi);

/// Descents i < n with pi_i > pi_{i+1}, plus position n. Requires n >= 1.
IndexSet descent_set(const Permutation& pi);
IndexSet ascent_set(const Permutation& pi);

/// Number of windows pi_i..pi_{i+m-1} order-isomorphic to tau.
std::int64_t consecutive_occurrences(const Permutation& pi, const PatternWord& tau);

/// The consecutive pattern 2 3 ... k 1 of length k (k >= 2).
PatternWord rising_drop_pattern(int k);

/// Descents d < n whose maximal increasing run ending at d has length
/// at least k-1. Requires k >= 2.
std::int64_t maximal_run_drop_count(const Permutation& pi, int k);

/// Longest increasing subsequence whose first element is pi_start (1-based).
int lis_from(const Permutation& pi, int start);

/// Reduces a sequence of distinct integers to the permutation with the same
/// relative order.
Permutation standardize(std::span<const int> distinct_values);

// ---------------------------------------------------------------------------
// Exhaustive generation

inline constexpr int kDefaultEnumerationBound = 14;

struct EnumerationLimits {
  int max_n = kDefaultEnumerationBound;
};

/// A deterministic slice of an enumeration. Objects are assigned to shards by
/// a prefix statistic (the first value for permutations, the first return
/// for trees), so shard outputs are disjoint and their union is everything.
struct Shard {
  int index = 0;
  int count = 1;

  bool owns(int prefix_key) const noexcept { return count <= 1 || (prefix_key - 1) % count == index; }
};

/// Visits every 132-avoiding permutation of length n exactly once, in
/// lexicographic order. Throws ResourceLimitError when n > limits.max_n.
void for_each_avoider(int n, const std::function<void(const Permutation&)>& visit,
                      Shard shard = {}, EnumerationLimits limits = {});

std::vector<Permutation> enumerate_avoiders(int n, EnumerationLimits limits = {});

/// All of S_n in lexicographic order (used for checks that are not restricted
/// to avoiders). Throws ResourceLimitError when n > limits.max_n.
void for_each_permutation(int n, const std::function<void(const Permutation&)>& visit,
                          EnumerationLimits limits = {.max_n = 10});

}  // namespace avoid132
