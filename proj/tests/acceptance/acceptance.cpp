// Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails. `--cli <path>` adds byte-level determinism checks through
// the command-line binary.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "avoid132/counting.hpp"
#include "avoid132/oracle.hpp"
#include "avoid132/permutation.hpp"
#include "avoid132/plane_tree.hpp"

namespace {

using namespace avoid132;

struct Outcome {
  bool ok = true;
  std::string note;
};

Outcome from_report(const VerificationReport& r) {
  Outcome o;
  o.ok = r.pass() && r.checked > 0;
  o.note = r.claim + " n<=" + std::to_string(r.n) + " checked=" + std::to_string(r.checked);
  if (!r.pass()) o.note += " failures=" + std::to_string(r.failures) + " first=" + r.witnesses.front().object;
  return o;
}

std::string run_command(const std::string& cmd) {
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  if (!pipe) throw std::runtime_error("cannot run " + cmd);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe.get())) > 0) out.append(buf.data(), got);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli;
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::string(argv[i]) == "--cli") cli = argv[i + 1];
  }

  struct Criterion {
    int id;
    std::string title;
    double limit_seconds;
    std::function<Outcome()> run;
  };

  const std::vector<Criterion> criteria{
      {1, "Catalan counts for avoiders and trees, n <= 12", 120,
       [] {
         Outcome o = from_report(verify_catalan(12));
         o.ok = o.ok && Nat(enumerate_avoiders(12).size()) == 208012 && Nat(enumerate_trees(12).size()) == 208012;
         return o;
       }},
      {2, "IRD/LDE and v-CIS/DRD equidistribution, n <= 9", 600,
       [] { return from_report(verify_equidistribution(9)); }},
      {3, "Heights vs right spanning widths (full, refined, maxima), n <= 10", 120,
       [] {
         Outcome o = from_report(verify_heights_rsw(10));
         o.ok = o.ok && enumerate_trees(10).size() == 16796;
         return o;
       }},
      {4, "Internal outdegrees and left paths vs level profile, n <= 10", 600,
       [] { return from_report(verify_chen_identity(10)); }},
      {5, "Structural lemmas on all avoiders n <= 9 (run count on all of S_8)", 600,
       [] { return from_report(verify_structural_lemmas(9)); }},
      {6, "Closed forms vs enumeration on full grids, n <= 9", 600,
       [] { return from_report(verify_formulas(9)); }},
      {7, "Bijection round trips and alternating-tree forests", 600,
       [] { return from_report(verify_roundtrips(9)); }},
      {8, "Truncated-series identity, p, q, l <= 8", 60, [] { return from_report(verify_lemma_a1(8)); }},
      {9, "Deterministic, shard-independent report payloads", 600,
       [&cli] {
         Outcome o;
         int compared = 0;
         for (const auto& claim : claim_ids()) {
           const int n = default_bound(claim);
           const std::string serial = verify(claim, n).payload();
           const std::string again = verify(claim, n).payload();
           const std::string sharded = verify(claim, n, VerifyOptions{.shards = 4}).payload();
           const std::string odd = verify(claim, n, VerifyOptions{.shards = 3}).payload();
           compared += 3;
           if (serial != again || serial != sharded || serial != odd) {
             o.ok = false;
             o.note += " mismatch:" + claim;
           }
         }
         if (!cli.empty()) {
           for (const std::string claim : {"thm4.1", "formulas"}) {
             const std::string base = "'" + cli + "' verify --claim " + claim;
             const std::string a = run_command(base);
             const std::string b = run_command(base + " --shards 4");
             compared += 1;
             if (a.empty() || a != b) {
               o.ok = false;
               o.note += " cli-mismatch:" + claim;
             }
           }
         }
         o.note = "comparisons=" + std::to_string(compared) + o.note;
         return o;
       }},
  };

  bool all_ok = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.note = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit_seconds) {
      o.ok = false;
      o.note += " over time limit";
    }
    all_ok = all_ok && o.ok;
    std::printf("criterion %d %s: %s [%s, %.2fs]\n", c.id, o.ok ? "PASS" : "FAIL", c.title.c_str(), o.note.c_str(),
                secs);
    std::fflush(stdout);
  }
  return all_ok ? 0 : 1;
}
