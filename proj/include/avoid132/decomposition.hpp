#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "avoid132/permutation.hpp"

namespace avoid132 {

/// A subsequence of a permutation: 1-based positions (strictly increasing)
/// with the values found there.
struct Segment {
  std::vector<int> positions;
  std::vector<int> values;

  int size() const noexcept { return static_cast<int>(positions.size()); }
  friend bool operator==(const Segment&, const Segment&) = default;
};

enum class DecompositionKind { kIrd, kDrd, kVcis, kLde };

std::string_view to_string(DecompositionKind kind);
/// Accepts "ird", "drd", "vcis", "lde". Throws ParseError otherwise.
DecompositionKind parse_decomposition_kind(std::string_view name);

struct Decomposition {
  DecompositionKind kind;
  std::vector<Segment> segments;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// Non-increasing positive parts (an integer partition of their sum).
class LengthDistribution {
 public:
  LengthDistribution() = default;
  /// Sorts `lengths` into non-increasing order. Throws DomainError on a
  /// non-positive entry.
  static LengthDistribution from_lengths(std::vector<int> lengths);
  /// Parses "3,3,1" (any order; sorted on the way in).
  static LengthDistribution parse(std::string_view text);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int count() const noexcept { return static_cast<int>(parts_.size()); }
  int sum() const noexcept;
  int largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
  std::string to_string() const;

  friend bool operator==(const LengthDistribution&, const LengthDistribution&) = default;
  friend auto operator<=>(const LengthDistribution&, const LengthDistribution&) = default;

 private:
  std::vector<int> parts_;
};

/// Maximal position-consecutive increasing runs, left to right.
Decomposition ird(const Permutation& pi);
/// Maximal position-consecutive decreasing runs, left to right.
Decomposition drd(const Permutation& pi);

/// Maximal value-consecutive increasing subsequences j, j+1, ..., j+k-1
/// (appearing left to right), ordered by first position.
Decomposition vcis(const Permutation& pi);

/// Layered decreasing envelope decomposition of a 132-avoider.
///
/// On an active interval [L, R]: the right-to-left maxima of pi_L..pi_R form
/// a group; the scan restarts just before that group's leftmost pole and
/// repeats until L is consumed. Every gap strictly between two consecutive
/// poles of a group is then processed the same way. Groups are returned in
/// decreasing order of their largest value, positions increasing within a
/// group. Throws DomainError if pi contains 132.
Decomposition lde(const Permutation& pi);

Decomposition decompose(const Permutation& pi, DecompositionKind kind);

LengthDistribution length_distribution(const Decomposition& d);

/// All partitions of n, each non-increasing, in reverse lexicographic order
/// (n first, 1^n last). partitions(0) is the single empty partition.
std::vector<LengthDistribution> integer_partitions(int n);

}  // namespace avoid132
