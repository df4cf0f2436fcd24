#include "avoid132/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <functional>
#include <map>
#include <set>
#include <thread>

#include "avoid132/alternating.hpp"
#include "avoid132/bijections.hpp"
#include "avoid132/counting.hpp"
#include "avoid132/decomposition.hpp"
#include "avoid132/errors.hpp"
#include "avoid132/json_io.hpp"
#include "avoid132/permutation.hpp"
#include "avoid132/plane_tree.hpp"
#include "avoid132/series.hpp"

namespace avoid132 {

namespace {

using Key = std::vector<int>;
using Counts = std::map<Key, std::int64_t>;

// Per-shard result. Everything merges by addition or concatenation, so the
// merged value does not depend on shard scheduling.
struct Tally {
  std::map<std::string, Counts> families;
  std::int64_t checked = 0;
  std::int64_t failures = 0;
  std::vector<Witness> witnesses;

  void add(const std::string& family, Key key) { ++families[family][std::move(key)]; }

  void check(bool ok, const std::function<Witness()>& witness) {
    ++checked;
    if (ok) return;
    ++failures;
    witnesses.push_back(witness());
    if (witnesses.size() > 4 * kMaxWitnesses) trim();
  }

  void trim() {
    std::sort(witnesses.begin(), witnesses.end(), [](const Witness& a, const Witness& b) {
      return std::tie(a.n, a.object, a.detail, a.replay) < std::tie(b.n, b.object, b.detail, b.replay);
    });
    witnesses.erase(std::unique(witnesses.begin(), witnesses.end()), witnesses.end());
    if (witnesses.size() > kMaxWitnesses) witnesses.resize(kMaxWitnesses);
  }

  void merge(Tally&& other) {
    for (auto& [name, counts] : other.families) {
      auto& mine = families[name];
      for (auto& [key, c] : counts) mine[key] += c;
    }
    checked += other.checked;
    failures += other.failures;
    for (auto& w : other.witnesses) witnesses.push_back(std::move(w));
    trim();
  }
};

Tally run_sharded(int shards, const std::function<Tally(Shard)>& work) {
  if (shards <= 1) return work(Shard{});
  std::vector<Tally> parts(static_cast<std::size_t>(shards));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(shards));
  std::vector<std::thread> threads;
  for (int s = 0; s < shards; ++s) {
    threads.emplace_back([&, s] {
      try {
        parts[static_cast<std::size_t>(s)] = work(Shard{s, shards});
      } catch (...) {
        errors[static_cast<std::size_t>(s)] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  Tally total;
  for (auto& p : parts) total.merge(std::move(p));
  return total;
}

std::string join(const Key& xs, char sep = ',') {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i != 0) out += sep;
    out += std::to_string(xs[i]);
  }
  return out;
}

// Pairs of sequences are stored in one key with -1 as the separator.
Key pair_key(const std::vector<int>& a, const std::vector<int>& b) {
  Key k = a;
  k.push_back(-1);
  k.insert(k.end(), b.begin(), b.end());
  return k;
}

std::pair<Key, Key> split_pair(const Key& k) {
  const auto sep = std::find(k.begin(), k.end(), -1);
  return {Key(k.begin(), sep), Key(sep + 1, k.end())};
}

std::string quoted(const Permutation& pi) { return "\"" + pi.to_string() + "\""; }

std::string enumerate_replay(std::string_view what, int n, const std::vector<std::string>& filters) {
  std::string out = "avoid132 enumerate --what " + std::string(what) + " --n " + std::to_string(n);
  for (const auto& f : filters) out += " --filter '" + f + "'";
  return out + " --count";
}

std::int64_t count_of(const Tally& t, const std::string& family, const Key& key) {
  const auto fam = t.families.find(family);
  if (fam == t.families.end()) return 0;
  const auto it = fam->second.find(key);
  return it == fam->second.end() ? 0 : it->second;
}

const Counts& family(const Tally& t, const std::string& name) {
  static const Counts kEmpty;
  const auto it = t.families.find(name);
  return it == t.families.end() ? kEmpty : it->second;
}

// Compares two count families key by key over the union of their keys.
void compare_families(Tally& out, const Tally& counts, int n, const std::string& left, const std::string& right,
                      const std::function<std::string(const Key&)>& describe,
                      const std::function<std::string(const Key&)>& replay) {
  std::set<Key> keys;
  for (const auto& [k, _] : family(counts, left)) keys.insert(k);
  for (const auto& [k, _] : family(counts, right)) keys.insert(k);
  for (const auto& k : keys) {
    const auto a = count_of(counts, left, k);
    const auto b = count_of(counts, right, k);
    out.check(a == b, [&] {
      return Witness{n, describe(k),
                     left + " count " + std::to_string(a) + " != " + right + " count " + std::to_string(b),
                     replay(k)};
    });
  }
}

VerificationReport finish(std::string claim, int max_n, Tally&& tally,
                          std::chrono::steady_clock::time_point start) {
  tally.trim();
  VerificationReport r;
  r.claim = std::move(claim);
  r.n = max_n;
  r.checked = tally.checked;
  r.failures = tally.failures;
  r.witnesses = std::move(tally.witnesses);
  r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

void require_bound(std::string_view claim, int max_n, const VerifyOptions& options) {
  if (max_n < 0) throw DomainError("max-n must be non-negative");
  if (options.shards < 1) throw DomainError("shards must be positive");
  const int bound = options.bound > 0 ? options.bound : default_bound(claim);
  if (max_n > bound) {
    throw ResourceLimitError("max-n " + std::to_string(max_n) + " exceeds the bound " + std::to_string(bound) +
                             " for claim " + std::string(claim));
  }
}

EnumerationLimits limits_for(int n) { return EnumerationLimits{.max_n = std::max(n, kDefaultEnumerationBound)}; }

struct ClaimEntry {
  std::string id;
  std::string alias;
  int bound;
  VerificationReport (*run)(int, VerifyOptions);
};

const std::vector<ClaimEntry>& claim_table() {
  static const std::vector<ClaimEntry> table{
      {"catalan", "catalan", 12, &verify_catalan},
      {"equidistribution", "thm4.1", 9, &verify_equidistribution},
      {"heights-rsw", "thm3.6", 10, &verify_heights_rsw},
      {"outdegree-paths", "thm3.1", 10, &verify_chen_identity},
      {"lemmas", "lemmas", 9, &verify_structural_lemmas},
      {"formulas", "formulas", 9, &verify_formulas},
      {"roundtrips", "roundtrips", 9, &verify_roundtrips},
      {"series", "lemA.1", 8, &verify_lemma_a1},
  };
  return table;
}

const ClaimEntry& find_claim(std::string_view claim) {
  for (const auto& e : claim_table()) {
    if (e.id == claim || e.alias == claim) return e;
  }
  throw ParseError("unknown claim '" + std::string(claim) + "'", 0);
}

// Structural checks on v-CIS segments of an avoider.
bool segments_non_crossing(const std::vector<int>& owner, int a, int b) {
  // Reading the positions owned by a or b, a crossing pattern a b a b shows
  // up as at least four alternating blocks.
  int blocks = 0;
  int last = -1;
  for (int o : owner) {
    if (o != a && o != b) continue;
    if (o != last) ++blocks;
    last = o;
  }
  return blocks <= 3;
}

bool nested_inside(const Segment& inner, const Segment& outer) {
  // All of `inner` lies between two consecutive positions of `outer`, with
  // smaller values.
  for (std::size_t i = 0; i + 1 < outer.positions.size(); ++i) {
    const bool between = std::all_of(inner.positions.begin(), inner.positions.end(), [&](int p) {
      return p > outer.positions[i] && p < outer.positions[i + 1];
    });
    if (between) return inner.values.back() < outer.values.front();
  }
  return false;
}

bool left_and_larger(const Segment& left, const Segment& right) {
  return left.positions.back() < right.positions.front() && right.values.back() < left.values.front();
}

bool segments_ordered(const Segment& s, const Segment& t) {
  return nested_inside(s, t) || nested_inside(t, s) || left_and_larger(s, t) || left_and_larger(t, s);
}

std::vector<std::vector<int>> sorted_groups(const Decomposition& d) {
  std::vector<std::vector<int>> out;
  for (const auto& s : d.segments) {
    auto v = s.values;
    std::sort(v.begin(), v.end());
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<int>> sibling_groups(const LabeledPlaneTree& t) {
  std::vector<std::vector<int>> out;
  for (int v = 0; v < t.shape.vertex_count(); ++v) {
    const auto kids = t.shape.children(v);
    if (kids.empty()) continue;
    std::vector<int> g;
    for (int c : kids) g.push_back(t.labels[static_cast<std::size_t>(c)]);
    std::sort(g.begin(), g.end());
    out.push_back(std::move(g));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Witness perm_witness(const Permutation& pi, std::string detail, std::string_view method) {
  return Witness{pi.size(), pi.to_string(), std::move(detail),
                 "avoid132 decompose --method " + std::string(method) + " --perm " + quoted(pi)};
}

std::string describe_partition_pair(const Key& k) {
  const auto [a, b] = split_pair(k);
  return "(" + join(a) + ")|(" + join(b) + ")";
}

}  // namespace

std::string VerificationReport::payload() const { return to_json(*this).dump(); }

const std::vector<std::string>& claim_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& e : claim_table()) out.push_back(e.id);
    return out;
  }();
  return ids;
}

int default_bound(std::string_view claim) { return find_claim(claim).bound; }

VerificationReport verify(std::string_view claim, int max_n, VerifyOptions options) {
  const auto& entry = find_claim(claim);
  if (options.bound <= 0) options.bound = entry.bound;
  return entry.run(max_n, options);
}

VerificationReport verify_catalan(int max_n, VerifyOptions options) {
  require_bound("catalan", max_n, options);
  const auto start = std::chrono::steady_clock::now();
  Tally total;
  for (int n = 0; n <= max_n; ++n) {
    Tally counts = run_sharded(options.shards, [n](Shard shard) {
      Tally t;
      for_each_avoider(n, [&](const Permutation&) { t.add("avoiders", {n}); }, shard, limits_for(n));
      for_each_tree(n, [&](const PlaneTree&) { t.add("trees", {n}); }, shard, limits_for(n));
      return t;
    });
    const Nat expected = catalan(n);
    for (const std::string what : {"avoiders", "trees"}) {
      const Nat got = count_of(counts, what, {n});
      total.check(got == expected, [&] {
        return Witness{n, what, "enumerated " + got.str() + " but catalan(n) = " + expected.str(),
                       enumerate_replay(what, n, {})};
      });
    }
  }
  return finish("catalan", max_n, std::move(total), start);
}

VerificationReport verify_equidistribution(int max_n, VerifyOptions options) {
  require_bound("equidistribution", max_n, options);
  const auto start = std::chrono::steady_clock::now();
  Tally total;
  for (int n = 1; n <= max_n; ++n) {
    Tally counts = run_sharded(options.shards, [n](Shard shard) {
      Tally t;
      for_each_avoider(
          n,
          [&](const Permutation& pi) {
            t.add("ird-lde", pair_key(length_distribution(ird(pi)).parts(), length_distribution(lde(pi)).parts()));
            t.add("vcis-drd", pair_key(length_distribution(vcis(pi)).parts(), length_distribution(drd(pi)).parts()));
          },
          shard, limits_for(n));
      return t;
    });
    const auto partitions = integer_partitions(n);
    for (const auto& lambda : partitions) {
      for (const auto& mu : partitions) {
        const Key lm = pair_key(lambda.parts(), mu.parts());
        const Key ml = pair_key(mu.parts(), lambda.parts());
        const std::int64_t sizes[4] = {count_of(counts, "ird-lde", lm), count_of(counts, "ird-lde", ml),
                                       count_of(counts, "vcis-drd", lm), count_of(counts, "vcis-drd", ml)};
        const bool equal = std::all_of(std::begin(sizes), std::end(sizes), [&](auto s) { return s == sizes[0]; });
        total.check(equal, [&] {
          return Witness{n, describe_partition_pair(lm),
                         "set sizes " + std::to_string(sizes[0]) + "," + std::to_string(sizes[1]) + "," +
                             std::to_string(sizes[2]) + "," + std::to_string(sizes[3]),
                         enumerate_replay("avoiders", n,
                                          {"ird-dist=" + lambda.to_string(), "lde-dist=" + mu.to_string()})};
        });
      }
    }
  }
  return finish("equidistribution", max_n, std::move(total), start);
}

VerificationReport verify_heights_rsw(int max_n, VerifyOptions options) {
  require_bound("heights-rsw", max_n, options);
  const auto start = std::chrono::steady_clock::now();
  Tally total;
  for (int n = 1; n <= max_n; ++n) {
    Tally counts = run_sharded(options.shards, [n](Shard shard) {
      Tally t;
      for_each_tree(
          n,
          [&](const PlaneTree& tree) {
            t.add("heights", heights(tree).values);
            t.add("rsw", rsw_multiset(tree, Population::kAll).values);
            const auto lh = leaf_heights(tree).values;
            const auto ir = rsw_multiset(tree, Population::kInternal).values;
            t.add("leaf-heights", pair_key({static_cast<int>(lh.size())}, lh));
            t.add("internal-rsw", pair_key({static_cast<int>(ir.size())}, ir));
            t.add("height", {tree_height(tree)});
            t.add("max-rsw", {rsw_tree(tree)});
          },
          shard, limits_for(n));
      return t;
    });
    compare_families(
        total, counts, n, "heights", "rsw", [](const Key& k) { return "{" + join(k) + "}"; },
        [n](const Key& k) { return enumerate_replay("trees", n, {"rsw-all=" + join(k)}); });
    compare_families(
        total, counts, n, "leaf-heights", "internal-rsw",
        [](const Key& k) {
          const auto [size, m] = split_pair(k);
          return std::to_string(size.front()) + ":{" + join(m) + "}";
        },
        [n](const Key& k) {
          const auto [size, m] = split_pair(k);
          return enumerate_replay("trees", n,
                                  {"internal=" + std::to_string(size.front()), "rsw-internal=" + join(m)});
        });
    compare_families(
        total, counts, n, "height", "max-rsw", [](const Key& k) { return std::to_string(k.front()); },
        [n](const Key& k) { return enumerate_replay("trees", n, {"rsw=" + std::to_string(k.front())}); });
  }
  return finish("heights-rsw", max_n, std::move(total), start);
}

VerificationReport verify_chen_identity(int max_n, VerifyOptions options) {
  require_bound("outdegree-paths", max_n, options);
  const auto start = std::chrono::steady_clock::now();
  Tally total;
  for (int n = 1; n <= max_n; ++n) {
    Tally counts = run_sharded(options.shards, [n](Shard shard) {
      Tally t;
      for_each_tree(
          n,
          [&](const PlaneTree& tree) {
            t.add("outdegrees|left-paths", pair_key(internal_outdegrees(tree).parts(), left_paths(tree).parts()));
            const auto profile = level_profile(tree);
            auto shifted = profile.odd_outdegrees;
            for (auto& x : shifted) ++x;
            t.add("odd+1|even", pair_key(LengthDistribution::from_lengths(std::move(shifted)).parts(),
                                         profile.even_degrees.parts()));
          },
          shard, limits_for(n));
      return t;
    });
    compare_families(total, counts, n, "outdegrees|left-paths", "odd+1|even", describe_partition_pair,
                     [n](const Key& k) {
                       const auto [a, b] = split_pair(k);
                       return enumerate_replay("trees", n,
                                               {"odd-outdegrees-plus-one=" + join(a), "even-degrees=" + join(b)});
                     });
  }
  return finish("outdegree-paths", max_n, std::move(total), start);
}

VerificationReport verify_structural_lemmas(int max_n, VerifyOptions options) {
  require_bound("lemmas", max_n, options);
  const auto start = std::chrono::steady_clock::now();
  Tally total;
  for (int n = 1; n <= max_n; ++n) {
    total.merge(run_sharded(options.shards, [n](Shard shard) {
      Tally t;
      if (n <= 8) {
        for_each_permutation(
            n,
            [&](const Permutation& pi) {
              if (!shard.owns(pi.at(1))) return;
              const auto runs = ird(pi).segments.size();
              const auto desc = descent_set(pi).size();
              t.check(static_cast<int>(runs) == desc, [&] {
                return perm_witness(pi, "IRD has " + std::to_string(runs) + " segments, " + std::to_string(desc) +
                                            " descents", "ird");
              });
            },
            EnumerationLimits{.max_n = 8});
      }
      for_each_avoider(
          n,
          [&](const Permutation& pi) {
            const int desc = descent_set(pi).size();
            const int asc = ascent_set(pi).size();
            const auto v = vcis(pi);
            t.check(static_cast<int>(v.segments.size()) == desc, [&] {
              return perm_witness(pi, "v-CIS has " + std::to_string(v.segments.size()) + " segments, " +
                                          std::to_string(desc) + " descents", "vcis");
            });
            const auto d = drd(pi);
            t.check(static_cast<int>(d.segments.size()) == asc + 1,
                    [&] { return perm_witness(pi, "DRD segment count is not ascents + 1", "drd"); });
            const auto l = lde(pi);
            t.check(static_cast<int>(l.segments.size()) == asc + 1,
                    [&] { return perm_witness(pi, "LDE group count is not ascents + 1", "lde"); });

            std::vector<int> owner(static_cast<std::size_t>(n));
            for (std::size_t s = 0; s < v.segments.size(); ++s) {
              for (int p : v.segments[s].positions) owner[static_cast<std::size_t>(p - 1)] = static_cast<int>(s);
            }
            bool crossing_free = true;
            bool ordered = true;
            for (std::size_t a = 0; a < v.segments.size(); ++a) {
              for (std::size_t b = a + 1; b < v.segments.size(); ++b) {
                crossing_free = crossing_free && segments_non_crossing(owner, static_cast<int>(a), static_cast<int>(b));
                ordered = ordered && segments_ordered(v.segments[a], v.segments[b]);
              }
            }
            t.check(crossing_free, [&] { return perm_witness(pi, "two v-CIS segments cross", "vcis"); });
            t.check(ordered, [&] { return perm_witness(pi, "two v-CIS segments are neither nested nor ordered", "vcis"); });

            const PlaneTree jr = jr_perm_to_tree(pi);
            const LabeledPlaneTree labeled = jr_labels(jr);
            for (int leaf : jr.leaves()) {
              const int value = labeled.labels[static_cast<std::size_t>(leaf)];
              const int lis = lis_from(pi, pi.position_of(value));
              t.check(lis == jr.depth(leaf), [&] {
                return perm_witness(pi, "leaf " + std::to_string(value) + " has height " +
                                            std::to_string(jr.depth(leaf)) + " but LIS " + std::to_string(lis),
                                    "ird");
              });
            }
            t.check(internal_outdegrees(jr) == length_distribution(l),
                    [&] { return perm_witness(pi, "JR outdegrees differ from the LDE distribution", "lde"); });
            t.check(right_paths(jr) == length_distribution(ird(pi)),
                    [&] { return perm_witness(pi, "JR right paths differ from the IRD distribution", "ird"); });
            t.check(sibling_groups(labeled) == sorted_groups(l),
                    [&] { return perm_witness(pi, "LDE groups differ from JR sibling groups", "lde"); });

            const LabeledPlaneTree phi = phi_perm_to_tree(pi);
            t.check(internal_outdegrees(phi.shape) == length_distribution(v),
                    [&] { return perm_witness(pi, "phi outdegrees differ from the v-CIS distribution", "vcis"); });
            t.check(left_paths(phi.shape) == length_distribution(d),
                    [&] { return perm_witness(pi, "phi left paths differ from the DRD distribution", "drd"); });
          },
          shard, limits_for(n));
      return t;
    }));
  }

  // Outside the avoiding class the v-CIS count can differ from the descents.
  const Permutation outsider{1, 5, 3, 6, 4, 2};
  total.check(!avoids_132(outsider) && vcis(outsider).segments.size() == 3 && descent_set(outsider).size() == 4,
              [&] { return perm_witness(outsider, "expected 3 v-CIS segments and 4 descents", "vcis"); });
  if (max_n >= 7) {
    const Permutation sample{5, 3, 4, 6, 1, 2, 7};
    const std::vector<std::vector<int>> runs{{5}, {3, 4, 6}, {1, 2, 7}};
    const std::vector<std::vector<int>> chains{{5, 6, 7}, {3, 4}, {1, 2}};
    std::vector<std::vector<int>> got_runs;
    std::vector<std::vector<int>> got_chains;
    for (const auto& s : ird(sample).segments) got_runs.push_back(s.values);
    for (const auto& s : vcis(sample).segments) got_chains.push_back(s.values);
    total.check(got_runs == runs, [&] { return perm_witness(sample, "unexpected IRD", "ird"); });
    total.check(got_chains == chains, [&] { return perm_witness(sample, "unexpected v-CIS", "vcis"); });
  }
  return finish("lemmas", max_n, std::move(total), start);
}

VerificationReport verify_formulas(int max_n, VerifyOptions options) {
  require_bound("formulas", max_n, options);
  const auto start = std::chrono::steady_clock::now();
  Tally total;
  const std::string avoiders = "avoiders";
  const auto num = [](int x) { return std::to_string(x); };
  for (int n = 1; n <= max_n; ++n) {
    Tally counts = run_sharded(options.shards, [n](Shard shard) {
      Tally t;
      for_each_avoider(
          n,
          [&](const Permutation& pi) {
            const int desc = descent_set(pi).size();
            t.add("start", {pi.at(1), desc});
            t.add("start-end", {pi.at(1), pi.at(n), desc});
            const auto runs = ird(pi).segments;
            int other = 0;
            for (std::size_t r = 0; r + 1 < runs.size(); ++r) other = std::max(other, runs[r].size());
            const auto groups = lde(pi).segments;
            int widest = 0;
            for (const auto& g : groups) widest = std::max(widest, g.size());
            t.add("runs", {static_cast<int>(runs.size()), static_cast<int>(groups.size()), runs.back().size(), other,
                           widest});
            for (int k = 3; k <= 5; ++k) {
              t.add("windows", {k, static_cast<int>(consecutive_occurrences(pi, rising_drop_pattern(k)))});
              t.add("run-drops", {k, static_cast<int>(maximal_run_drop_count(pi, k))});
            }
          },
          shard, limits_for(n));
      for_each_tree(
          n,
          [&](const PlaneTree& tree) {
            int even = 0, odd = 0, even_max = 0, odd_max = 0;
            for (int v = 0; v < tree.vertex_count(); ++v) {
              if (tree.depth(v) % 2 == 0) {
                ++even;
                even_max = std::max(even_max, tree.outdegree(v));
              } else {
                ++odd;
                odd_max = std::max(odd_max, tree.outdegree(v));
              }
            }
            t.add("levels", {even, odd, even_max, odd_max});
          },
          shard, limits_for(n));
      return t;
    });

    const auto check_count = [&](const Nat& formula, std::int64_t brute, const std::string& object,
                                 const std::string& replay) {
      total.check(formula == brute, [&] {
        return Witness{n, object, "formula " + formula.str() + ", enumeration " + std::to_string(brute), replay};
      });
    };

    for (int i = 1; i <= n; ++i) {
      for (int k = 1; k <= n; ++k) {
        check_count(count_start_descents(n, i, k), count_of(counts, "start", {i, k}),
                    "start-descents i=" + num(i) + " k=" + num(k),
                    enumerate_replay(avoiders, n, {"first=" + num(i), "descents=" + num(k)}));
        for (int j = 1; j <= n; ++j) {
          if (i == j) continue;
          check_count(count_start_end_descents(n, i, j, k), count_of(counts, "start-end", {i, j, k}),
                      "start-end-descents i=" + num(i) + " j=" + num(j) + " k=" + num(k),
                      enumerate_replay(avoiders, n, {"first=" + num(i), "last=" + num(j), "descents=" + num(k)}));
        }
      }
    }

    const auto& runs = family(counts, "runs");
    const auto& levels = family(counts, "levels");
    for (int p = 1; p <= n; ++p) {
      for (int q = 1; q <= n; ++q) {
        for (int h = 1; h <= n; ++h) {
          for (int l = 1; l <= n; ++l) {
            std::int64_t perm_side = 0;
            for (const auto& [key, c] : runs) {
              if (key[0] == p && key[1] == q && key[2] <= h && key[3] <= h + 1 && key[4] <= l + 1) perm_side += c;
            }
            std::int64_t tree_side = 0;
            for (const auto& [key, c] : levels) {
              if (key[0] == p && key[1] == q && key[2] <= h && key[3] <= l) tree_side += c;
            }
            const Nat formula = count_bounded_runs(n, p, q, h, l);
            const std::string object = "bounded-runs p=" + num(p) + " q=" + num(q) + " h=" + num(h) + " l=" + num(l);
            check_count(formula, perm_side, object,
                        enumerate_replay(avoiders, n,
                                         {"ir-count=" + num(p), "lde-count=" + num(q), "ir-last<=" + num(h),
                                          "ir-max-other<=" + num(h + 1), "lde-max<=" + num(l + 1)}));
            check_count(formula, tree_side, object + " (trees)",
                        enumerate_replay("trees", n,
                                         {"even-count=" + num(p), "odd-count=" + num(q),
                                          "even-max-outdegree<=" + num(h), "odd-max-outdegree<=" + num(l)}));
          }
        }
      }
    }

    for (int h = 1; h <= n + 1; ++h) {
      std::int64_t brute = 0;
      for (const auto& [key, c] : runs) {
        if (key[2] <= h && key[3] <= h + 1) brute += c;
      }
      check_count(count_bounded_ir(n, h), brute, "bounded-ir h=" + num(h),
                  enumerate_replay(avoiders, n, {"ir-last<=" + num(h), "ir-max-other<=" + num(h + 1)}));
    }

    for (int k = 3; k <= 5; ++k) {
      Nat mass = 0;
      for (int m = 0; m <= n; ++m) {
        const Nat formula = count_consec_pattern(n, k, m);
        mass += formula;
        const std::string object = "consec-pattern k=" + num(k) + " m=" + num(m);
        check_count(formula, count_of(counts, "windows", {k, m}), object,
                    enumerate_replay(avoiders, n, {"consec" + num(k) + "=" + num(m)}));
        check_count(formula, count_of(counts, "run-drops", {k, m}), object + " (maximal runs)",
                    enumerate_replay(avoiders, n, {"rundrops" + num(k) + "=" + num(m)}));
      }
      total.check(mass == catalan(n), [&] {
        return Witness{n, "consec-pattern k=" + num(k) + " total",
                       "sum over m is " + mass.str() + ", catalan(n) is " + catalan(n).str(),
                       "avoid132 count --formula catalan --n " + num(n)};
      });
    }
  }
  return finish("formulas", max_n, std::move(total), start);
}

VerificationReport verify_roundtrips(int max_n, VerifyOptions options) {
  require_bound("roundtrips", max_n, options);
  const auto start = std::chrono::steady_clock::now();
  Tally total;
  for (int n = 1; n <= max_n; ++n) {
    Tally counts = run_sharded(options.shards, [n](Shard shard) {
      Tally t;
      for_each_avoider(
          n,
          [&](const Permutation& pi) {
            const PlaneTree jr = jr_perm_to_tree(pi);
            t.check(jr_tree_to_perm(jr) == pi,
                    [&] { return Witness{n, pi.to_string(), "JR round trip failed", "avoid132 map --bijection jr --in " + quoted(pi)}; });
            const LabeledPlaneTree phi = phi_perm_to_tree(pi);
            t.check(phi_tree_to_perm(phi.shape) == pi,
                    [&] { return Witness{n, pi.to_string(), "phi round trip failed", "avoid132 map --bijection phi --in " + quoted(pi)}; });
            t.check(phi_labels(phi.shape) == phi, [&] {
              return Witness{n, pi.to_string(), "phi labels are not canonical",
                             "avoid132 map --bijection phi --in " + quoted(pi)};
            });
            t.add("jr-image:" + jr.to_text(), {});
            t.add("phi-image:" + phi.shape.to_text(), {});
          },
          shard, limits_for(n));
      for_each_tree(
          n,
          [&](const PlaneTree& tree) {
            const Permutation a = jr_tree_to_perm(tree);
            t.check(avoids_132(a) && jr_perm_to_tree(a) == tree, [&] {
              return Witness{n, tree.to_text(), "JR inverse round trip failed",
                             "avoid132 map --bijection jr-inv --in '" + tree.to_text() + "'"};
            });
            const Permutation b = phi_tree_to_perm(tree);
            t.check(avoids_132(b) && phi_perm_to_tree(b).shape == tree, [&] {
              return Witness{n, tree.to_text(), "phi inverse round trip failed",
                             "avoid132 map --bijection phi-inv --in '" + tree.to_text() + "'"};
            });
          },
          shard, limits_for(n));
      return t;
    });
    // Images: every tree reached exactly once, catalan(n) of them.
    for (const std::string map : {"jr", "phi"}) {
      std::int64_t distinct = 0;
      bool injective = true;
      const std::string prefix = map + "-image:";
      for (const auto& [name, c] : counts.families) {
        if (!name.starts_with(prefix)) continue;
        ++distinct;
        injective = injective && c.at({}) == 1;
      }
      counts.check(injective && catalan(n) == distinct, [&] {
        return Witness{n, map + " image", "image has " + std::to_string(distinct) + " distinct trees",
                       enumerate_replay("trees", n, {})};
      });
    }
    counts.families.clear();
    total.merge(std::move(counts));
  }

  // Alternating-tree forests on the exhaustive small pool.
  const int pool_edges = std::min(6, max_n);
  total.merge(run_sharded(options.shards, [pool_edges](Shard shard) {
    Tally t;
    for_each_alt_tree(
        pool_edges, 4, 4,
        [&](const SetAlternatingTree& tree) {
          const auto witness = [&](std::string detail) {
            return Witness{tree.shape.edges(), to_text(tree), std::move(detail),
                           "echo '" + to_json(tree).dump() +
                               "' > tree.json && avoid132 map --bijection alt-to-forest --in tree.json"};
          };
          const AltTreeParams params = alt_tree_params(tree);
          const SmallForest forest = alt_tree_to_forest(tree);
          const auto problems = forest_violations(forest);
          t.check(problems.empty(), [&] { return witness("forest violates " + problems.front()); });
          t.check(static_cast<int>(forest.trees.size()) == params.l_e + params.l_o,
                  [&] { return witness("forest has " + std::to_string(forest.trees.size()) + " trees"); });
          if (!problems.empty()) return;
          t.check(forest_to_alt_tree(forest) == tree, [&] { return witness("forest does not merge back"); });
        },
        shard);
    return t;
  }));
  return finish("roundtrips", max_n, std::move(total), start);
}

VerificationReport verify_lemma_a1(int max_n, VerifyOptions options) {
  require_bound("series", max_n, options);
  const auto start = std::chrono::steady_clock::now();
  Tally total = run_sharded(options.shards, [max_n](Shard shard) {
    Tally t;
    for (int p = 0; p <= max_n; ++p) {
      if (!shard.owns(p + 1)) continue;
      for (int q = 0; q <= max_n; ++q) {
        for (int l = 0; l <= max_n; ++l) {
          const auto sides = lemma_a1_sides(p, q, l);
          t.check(sides.series_coefficient == sides.kappa_sum, [&] {
            return Witness{std::max({p, q, l}),
                           "p=" + std::to_string(p) + " q=" + std::to_string(q) + " l=" + std::to_string(l),
                           "series " + sides.series_coefficient.str() + ", kappa sum " + sides.kappa_sum.str(),
                           "avoid132 count --formula series-identity --p " + std::to_string(p) + " --q " +
                               std::to_string(q) + " --l " + std::to_string(l)};
          });
        }
      }
    }
    return t;
  });
  return finish("series", max_n, std::move(total), start);
}

}  // namespace avoid132
