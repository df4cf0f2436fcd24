#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace avoid132 {

/// A failed assertion. `object` is the canonical text of the offending
/// permutation, tree or parameter tuple; `replay` is a CLI invocation that
/// reproduces the independent side of the comparison.
struct Witness {
  int n = 0;
  std::string object;
  std::string detail;
  std::string replay;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct VerificationReport {
  std::string claim;
  int n = 0;
  std::int64_t checked = 0;
  std::int64_t failures = 0;
  /// The smallest failures, ordered by (n, object), at most kMaxWitnesses.
  std::vector<Witness> witnesses;
  double wall_seconds = 0.0;

  bool pass() const noexcept { return failures == 0; }
  /// Deterministic JSON payload (no timing).
  std::string payload() const;
};

inline constexpr std::size_t kMaxWitnesses = 8;

struct VerifyOptions {
  int shards = 1;
  /// Largest n accepted; 0 means the claim's default bound.
  int bound = 0;
};

/// Claim identifiers accepted by verify(), in a fixed order.
const std::vector<std::string>& claim_ids();
/// Default bound for a claim. Throws ParseError for an unknown claim.
int default_bound(std::string_view claim);

/// Runs a claim for every n up to max_n. Throws ResourceLimitError when
/// max_n exceeds the bound and ParseError for an unknown claim.
VerificationReport verify(std::string_view claim, int max_n, VerifyOptions options = {});

VerificationReport verify_catalan(int max_n, VerifyOptions options = {});
VerificationReport verify_equidistribution(int max_n, VerifyOptions options = {});
VerificationReport verify_heights_rsw(int max_n, VerifyOptions options = {});
VerificationReport verify_chen_identity(int max_n, VerifyOptions options = {});
VerificationReport verify_structural_lemmas(int max_n, VerifyOptions options = {});
VerificationReport verify_formulas(int max_n, VerifyOptions options = {});
VerificationReport verify_roundtrips(int max_n, VerifyOptions options = {});
VerificationReport verify_lemma_a1(int max_n, VerifyOptions options = {});

}  // namespace avoid132
