// Command-line front end: decompose, map, stats, count, enumerate, verify.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "avoid132/alternating.hpp"
#include "avoid132/bijections.hpp"
#include "avoid132/counting.hpp"
#include "avoid132/decomposition.hpp"
#include "avoid132/errors.hpp"
#include "avoid132/filters.hpp"
#include "avoid132/json_io.hpp"
#include "avoid132/oracle.hpp"
#include "avoid132/permutation.hpp"
#include "avoid132/plane_tree.hpp"
#include "avoid132/series.hpp"

namespace {

using namespace avoid132;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitLimit = 3;

// Usage problems detected after CLI11 parsing (missing formula symbols and
// the like).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

int report_error(std::string_view code, int exit_code, const std::string& message,
                 std::optional<std::size_t> offset = std::nullopt) {
  Json body;
  body["code"] = code;
  body["exit"] = exit_code;
  body["message"] = message;
  if (offset) body["offset"] = *offset;
  Json doc;
  doc["error"] = std::move(body);
  std::cerr << doc.dump() << '\n';
  return exit_code;
}

std::optional<int> env_bound() {
  const char* raw = std::getenv("AVOID132_MAX_N");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  try {
    std::size_t used = 0;
    const int v = std::stoi(raw, &used);
    if (used == std::string(raw).size() && v >= 0) return v;
  } catch (const std::exception&) {
  }
  throw UsageError("AVOID132_MAX_N must be a non-negative integer");
}

std::string join(const std::vector<int>& xs, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i != 0) out += sep;
    out += std::to_string(xs[i]);
  }
  return out;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return Json::parse(buffer.str());
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON in '") + path + "': " + e.what(), e.byte);
  }
}

struct Options {
  bool json = false;

  std::string method;
  std::string perm;

  std::string bijection;
  std::string input;

  std::string tree;
  std::string what = "all";

  std::string formula;
  std::map<std::string, int> symbols;

  std::string objects;
  int n = -1;
  std::vector<std::string> filters;
  bool count_only = false;

  std::string claim;
  int max_n = -1;
  int shards = 1;
  int bound = 0;
  bool timing = false;
};

int cmd_decompose(const Options& o) {
  const Permutation pi = Permutation::parse(o.perm);
  const Decomposition d = decompose(pi, parse_decomposition_kind(o.method));
  if (o.json) {
    std::cout << to_json(d).dump() << '\n';
    return kExitOk;
  }
  std::cout << "kind: " << to_string(d.kind) << '\n' << "segments:";
  for (std::size_t i = 0; i < d.segments.size(); ++i) {
    std::cout << (i == 0 ? " " : " / ") << join(d.segments[i].values, " ");
  }
  std::cout << '\n' << "distribution: " << length_distribution(d).to_string() << '\n';
  return kExitOk;
}

int cmd_map(const Options& o) {
  const std::string& b = o.bijection;
  if (b == "alt-to-forest" || b == "forest-to-alt") {
    const Json doc = read_json_file(o.input);
    const Json out = b == "alt-to-forest" ? to_json(alt_tree_to_forest(alt_tree_from_json(doc)))
                                          : to_json(forest_to_alt_tree(forest_from_json(doc)));
    std::cout << out.dump(2) << '\n';
    return kExitOk;
  }

  std::string output;
  Json labelled;
  if (b == "jr" || b == "phi") {
    const Permutation pi = Permutation::parse(o.input);
    const LabeledPlaneTree t = b == "jr" ? jr_labels(jr_perm_to_tree(pi)) : phi_perm_to_tree(pi);
    output = t.shape.to_text();
    labelled = to_json(t);
  } else {
    const PlaneTree t = PlaneTree::parse(o.input);
    if (b == "jr-inv") {
      output = jr_tree_to_perm(t).to_string();
    } else if (b == "phi-inv") {
      output = phi_tree_to_perm(t).to_string();
    } else if (b == "mirror") {
      output = mirror(t).to_text();
    } else {
      output = level_switch(t).to_text();
    }
  }
  if (o.json) {
    Json doc;
    doc["bijection"] = b;
    doc["input"] = o.input;
    doc["output"] = output;
    if (!labelled.is_null()) doc["labelled"] = labelled;
    std::cout << doc.dump() << '\n';
  } else {
    std::cout << output << '\n';
  }
  return kExitOk;
}

int cmd_stats(const Options& o) {
  const PlaneTree t = PlaneTree::parse(o.tree);
  const Json all = tree_stats_json(t);
  static const std::map<std::string, std::vector<std::string>> groups{
      {"heights", {"heights", "leaf_heights", "height"}},
      {"rsw", {"rsw_all", "rsw_internal", "rsw"}},
      {"paths", {"left_paths", "right_paths", "internal_outdegrees"}},
      {"levels", {"even_degrees", "odd_outdegrees"}},
  };
  Json out;
  out["tree"] = t.to_text();
  for (auto it = all.begin(); it != all.end(); ++it) {
    bool wanted = o.what == "all";
    if (!wanted) {
      const auto& keys = groups.at(o.what);
      wanted = std::find(keys.begin(), keys.end(), it.key()) != keys.end();
    }
    if (wanted) out[it.key()] = it.value();
  }
  if (o.json) {
    std::cout << out.dump() << '\n';
    return kExitOk;
  }
  for (auto it = out.begin(); it != out.end(); ++it) {
    std::cout << it.key() << ": ";
    const Json& v = it.value();
    if (v.is_array()) {
      std::vector<int> xs = v.get<std::vector<int>>();
      std::cout << join(xs);
    } else if (v.is_string()) {
      std::cout << v.get<std::string>();
    } else if (v.is_null()) {
      std::cout << "undefined";
    } else {
      std::cout << v.dump();
    }
    std::cout << '\n';
  }
  return kExitOk;
}

struct FormulaSpec {
  std::vector<std::string> symbols;
  std::function<Json(const std::map<std::string, int>&)> eval;
};

const std::map<std::string, FormulaSpec>& formulas() {
  using S = const std::map<std::string, int>&;
  const auto value = [](const Integer& x) {
    Json j;
    j["value"] = x.str();
    return j;
  };
  static const std::map<std::string, FormulaSpec> table{
      {"catalan", {{"n"}, [value](S s) { return value(catalan(s.at("n"))); }}},
      {"binomial", {{"n", "k"}, [value](S s) { return value(binomial(s.at("n"), s.at("k"))); }}},
      {"narayana", {{"n", "k"}, [value](S s) { return value(narayana(s.at("n"), s.at("k"))); }}},
      {"gen-narayana", {{"i", "n", "j"}, [value](S s) { return value(gen_narayana(s.at("i"), s.at("n"), s.at("j"))); }}},
      {"kappa", {{"t", "n", "m"}, [value](S s) { return value(kappa(s.at("t"), s.at("n"), s.at("m"))); }}},
      {"compositions",
       {{"n", "k", "w"}, [value](S s) { return value(bounded_compositions(s.at("n"), s.at("k"), s.at("w"))); }}},
      {"start-descents",
       {{"n", "i", "k"}, [value](S s) { return value(count_start_descents(s.at("n"), s.at("i"), s.at("k"))); }}},
      {"start-end-descents",
       {{"n", "i", "j", "k"},
        [value](S s) { return value(count_start_end_descents(s.at("n"), s.at("i"), s.at("j"), s.at("k"))); }}},
      {"bounded-runs",
       {{"n", "p", "q", "h", "l"},
        [value](S s) {
          return value(count_bounded_runs(s.at("n"), s.at("p"), s.at("q"), s.at("h"), s.at("l")));
        }}},
      {"bounded-ir", {{"n", "h"}, [value](S s) { return value(count_bounded_ir(s.at("n"), s.at("h"))); }}},
      {"consec-pattern",
       {{"n", "k", "m"}, [value](S s) { return value(count_consec_pattern(s.at("n"), s.at("k"), s.at("m"))); }}},
      {"series-identity",
       {{"p", "q", "l"},
        [](S s) {
          const auto sides = lemma_a1_sides(s.at("p"), s.at("q"), s.at("l"));
          Json j;
          j["value"] = sides.series_coefficient.str();
          j["kappa_sum"] = sides.kappa_sum.str();
          j["equal"] = sides.series_coefficient == sides.kappa_sum;
          return j;
        }}},
  };
  return table;
}

int cmd_count(const Options& o) {
  const auto it = formulas().find(o.formula);
  if (it == formulas().end()) throw UsageError("unknown formula '" + o.formula + "'");
  const auto& spec = it->second;
  for (const auto& sym : spec.symbols) {
    if (!o.symbols.contains(sym)) throw UsageError("formula '" + o.formula + "' needs --" + sym);
  }
  for (const auto& [sym, _] : o.symbols) {
    if (std::find(spec.symbols.begin(), spec.symbols.end(), sym) == spec.symbols.end()) {
      throw UsageError("formula '" + o.formula + "' does not take --" + sym);
    }
  }
  const Json result = spec.eval(o.symbols);
  if (o.json) {
    Json doc;
    doc["formula"] = o.formula;
    doc["params"] = Json::object();
    for (const auto& sym : spec.symbols) doc["params"][sym] = o.symbols.at(sym);
    for (auto r = result.begin(); r != result.end(); ++r) doc[r.key()] = r.value();
    std::cout << doc.dump() << '\n';
  } else if (result.contains("kappa_sum")) {
    std::cout << result["value"].get<std::string>() << ' ' << result["kappa_sum"].get<std::string>() << '\n';
  } else {
    std::cout << result["value"].get<std::string>() << '\n';
  }
  return kExitOk;
}

int cmd_enumerate(const Options& o) {
  const bool perms = o.objects == "avoiders";
  const ObjectKind kind = perms ? ObjectKind::kPermutation : ObjectKind::kTree;
  std::vector<FilterSpec> filters;
  for (const auto& f : o.filters) filters.push_back(parse_filter(f, kind));
  const EnumerationLimits limits{.max_n = env_bound().value_or(kDefaultEnumerationBound)};

  std::int64_t count = 0;
  Json items = Json::array();
  const auto emit = [&](const std::string& text) {
    ++count;
    if (o.count_only) return;
    if (o.json) {
      items.push_back(text);
    } else {
      std::cout << text << '\n';
    }
  };
  if (perms) {
    for_each_avoider(
        o.n, [&](const Permutation& pi) { if (matches(pi, filters)) emit(pi.to_string()); }, Shard{}, limits);
  } else {
    for_each_tree(
        o.n, [&](const PlaneTree& t) { if (matches(t, filters)) emit(t.to_text()); }, Shard{}, limits);
  }
  if (o.json) {
    Json doc;
    doc["what"] = o.objects;
    doc["n"] = o.n;
    doc["filters"] = Json::array();
    for (const auto& f : filters) doc["filters"].push_back(f.to_string());
    doc["count"] = count;
    if (!o.count_only) doc["items"] = std::move(items);
    std::cout << doc.dump() << '\n';
  } else if (o.count_only) {
    std::cout << count << '\n';
  }
  return kExitOk;
}

int cmd_verify(const Options& o) {
  VerifyOptions options;
  options.shards = o.shards;
  options.bound = o.bound > 0 ? o.bound : env_bound().value_or(0);
  const int max_n = o.max_n >= 0 ? o.max_n : default_bound(o.claim);
  const VerificationReport report = verify(o.claim, max_n, options);
  std::cout << report.payload() << '\n';
  if (o.timing) std::cerr << "wall_seconds: " << report.wall_seconds << '\n';
  return report.pass() ? kExitOk : kExitFail;
}

int run(int argc, char** argv) {
  CLI::App app{"Tools for 132-avoiding permutations and plane trees", "avoid132"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  Options o;
  app.add_flag("--json", o.json, "Emit JSON instead of text");

  auto* dec = app.add_subcommand("decompose", "Decompose a permutation");
  dec->add_option("--method", o.method, "ird, drd, vcis or lde")->required()->check(CLI::IsMember({"ird", "drd", "vcis", "lde"}));
  dec->add_option("--perm", o.perm, "Permutation, e.g. \"5 3 4 6 1 2 7\"")->required();

  auto* map = app.add_subcommand("map", "Apply a bijection or tree transform");
  map->add_option("--bijection", o.bijection, "Map name")
      ->required()
      ->check(CLI::IsMember({"jr", "jr-inv", "phi", "phi-inv", "mirror", "level-switch", "alt-to-forest", "forest-to-alt"}));
  map->add_option("--in", o.input, "Permutation, tree word, or JSON file path for alternating trees")->required();

  auto* stats = app.add_subcommand("stats", "Statistics of a plane tree");
  stats->add_option("--tree", o.tree, "Parenthesis word")->required();
  stats->add_option("--what", o.what, "heights, rsw, paths, levels or all")
      ->check(CLI::IsMember({"heights", "rsw", "paths", "levels", "all"}));

  auto* count = app.add_subcommand("count", "Evaluate a closed-form count");
  // --h is a formula symbol, so this subcommand only takes the long help flag.
  count->set_help_flag("--help", "Print this help message and exit");
  count->add_option("--formula", o.formula, "Formula name")->required();
  for (const char* sym : {"n", "i", "j", "k", "p", "q", "h", "l", "m", "t", "w"}) {
    count->add_option_function<int>(std::string("--") + sym, [&o, sym](const int& v) { o.symbols[sym] = v; },
                                    std::string("Value of ") + sym);
  }

  auto* en = app.add_subcommand("enumerate", "List avoiders or trees of a given size");
  en->add_option("--what", o.objects, "avoiders or trees")->required()->check(CLI::IsMember({"avoiders", "trees"}));
  en->add_option("--n", o.n, "Size")->required()->check(CLI::NonNegativeNumber);
  en->add_option("--filter", o.filters, "Statistic constraint key=value, key<=value or key>=value");
  en->add_flag("--count", o.count_only, "Only print the number of matches");

  auto* ver = app.add_subcommand("verify", "Exhaustively verify a claim");
  std::vector<std::string> claims = claim_ids();
  for (const char* alias : {"thm4.1", "thm3.6", "thm3.1", "lemA.1"}) claims.emplace_back(alias);
  ver->add_option("--claim", o.claim, "Claim identifier")->required()->check(CLI::IsMember(claims));
  ver->add_option("--max-n", o.max_n, "Largest size checked (default: the claim's bound)")->check(CLI::NonNegativeNumber);
  ver->add_option("--shards", o.shards, "Parallel shards")->check(CLI::PositiveNumber);
  ver->add_option("--bound", o.bound, "Override the claim's size bound")->check(CLI::PositiveNumber);
  ver->add_flag("--timing", o.timing, "Print wall time to stderr");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return report_error("usage", kExitUsage, e.what());
  }

  try {
    if (dec->parsed()) return cmd_decompose(o);
    if (map->parsed()) return cmd_map(o);
    if (stats->parsed()) return cmd_stats(o);
    if (count->parsed()) return cmd_count(o);
    if (en->parsed()) return cmd_enumerate(o);
    return cmd_verify(o);
  } catch (const ParseError& e) {
    return report_error("parse", kExitUsage, e.what(), e.offset());
  } catch (const UsageError& e) {
    return report_error("usage", kExitUsage, e.what());
  } catch (const DomainError& e) {
    return report_error("domain", kExitUsage, e.what());
  } catch (const ResourceLimitError& e) {
    return report_error("resource_limit", kExitLimit, e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    return report_error("internal", kExitUsage, e.what());
  }
}
