#include "avoid132/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "avoid132/errors.hpp"

namespace avoid132 {

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  const int n = size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : values_) {
    if (v < 1 || v > n) {
      throw DomainError("permutation value " + std::to_string(v) + " outside 1.." + std::to_string(n));
    }
    if (seen[static_cast<std::size_t>(v)]) {
      throw DomainError("permutation value " + std::to_string(v) + " repeated");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation::Permutation(std::initializer_list<int> values) : Permutation(std::vector<int>(values)) {}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> values;
  std::vector<std::size_t> offsets;
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      ++i;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw ParseError(std::string("unexpected character '") + c + "' in permutation", i);
    }
    const std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    tokens.emplace_back(text.substr(start, i - start));
    offsets.push_back(start);
  }

  if (tokens.size() == 1 && tokens[0].size() > 1) {
    for (std::size_t k = 0; k < tokens[0].size(); ++k) {
      values.push_back(tokens[0][k] - '0');
      offsets.push_back(offsets[0] + k);
    }
    offsets.erase(offsets.begin());
  } else {
    for (const auto& t : tokens) {
      if (t.size() > 9) throw ParseError("permutation value too large", offsets[values.size()]);
      values.push_back(std::stoi(t));
    }
  }

  const int n = static_cast<int>(values.size());
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (std::size_t k = 0; k < values.size(); ++k) {
    const int v = values[k];
    if (v < 1 || v > n) {
      throw ParseError("value " + std::to_string(v) + " outside 1.." + std::to_string(n), offsets[k]);
    }
    if (seen[static_cast<std::size_t>(v)]) {
      throw ParseError("duplicate value " + std::to_string(v), offsets[k]);
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
  return Permutation(std::move(values));
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::reverse_identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.rbegin(), v.rend(), 1);
  return Permutation(std::move(v));
}

int Permutation::position_of(int v) const {
  const auto it = std::find(values_.begin(), values_.end(), v);
  if (it == values_.end()) throw DomainError("value " + std::to_string(v) + " not in permutation");
  return static_cast<int>(it - values_.begin()) + 1;
}

std::string Permutation::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) out << ' ';
    out << values_[i];
  }
  return out.str();
}

bool IndexSet::contains(int position) const {
  return std::binary_search(positions.begin(), positions.end(), position);
}

namespace {

bool extend_match(std::span<const int> pi, std::span<const int> tau, std::vector<int>& chosen, int from) {
  const std::size_t depth = chosen.size();
  if (depth == tau.size()) return true;
  const int remaining = static_cast<int>(tau.size() - depth);
  const int n = static_cast<int>(pi.size());
  for (int p = from; p + remaining <= n; ++p) {
    bool consistent = true;
    for (std::size_t e = 0; e < depth && consistent; ++e) {
      consistent = (pi[p] < pi[chosen[e]]) == (tau[depth] < tau[e]);
    }
    if (!consistent) continue;
    chosen.push_back(p);
    if (extend_match(pi, tau, chosen, p + 1)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

bool contains_pattern(const Permutation& pi, const PatternWord& tau) {
  if (tau.size() > pi.size()) return false;
  std::vector<int> chosen;
  chosen.reserve(static_cast<std::size_t>(tau.size()));
  return extend_match(pi.values(), tau.values(), chosen, 0);
}

bool avoids_132(const Permutation& pi) {
  // Right-to-left scan. `pending` is the largest scanned value that has a
  // larger scanned value to its left; a smaller value further left completes
  // a 132.
  std::vector<int> stack;
  int pending = 0;
  const auto v = pi.values();
  for (auto it = v.rbegin(); it != v.rend(); ++it) {
    if (*it < pending) return false;
    while (!stack.empty() && stack.back() < *it) {
      pending = stack.back();
      stack.pop_back();
    }
    stack.push_back(*it);
  }
  return true;
}

IndexSet descent_set(const Permutation& pi) {
  if (pi.empty()) throw DomainError("descent_set requires n >= 1");
  IndexSet out;
  for (int i = 1; i < pi.size(); ++i) {
    if (pi.at(i) > pi.at(i + 1)) out.positions.push_back(i);
  }
  out.positions.push_back(pi.size());
  return out;
}

IndexSet ascent_set(const Permutation& pi) {
  if (pi.empty()) throw DomainError("ascent_set requires n >= 1");
  IndexSet out;
  for (int i = 1; i < pi.size(); ++i) {
    if (pi.at(i) < pi.at(i + 1)) out.positions.push_back(i);
  }
  return out;
}

Permutation standardize(std::span<const int> distinct_values) {
  std::vector<int> order(distinct_values.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return distinct_values[static_cast<std::size_t>(a)] < distinct_values[static_cast<std::size_t>(b)]; });
  std::vector<int> ranks(distinct_values.size());
  for (std::size_t r = 0; r < order.size(); ++r) ranks[static_cast<std::size_t>(order[r])] = static_cast<int>(r) + 1;
  return Permutation(std::move(ranks));
}

std::int64_t consecutive_occurrences(const Permutation& pi, const PatternWord& tau) {
  const int n = pi.size();
  const int m = tau.size();
  if (m > n) return 0;
  if (m == 0) return n + 1;
  std::int64_t count = 0;
  const auto v = pi.values();
  for (int i = 0; i + m <= n; ++i) {
    if (standardize(v.subspan(static_cast<std::size_t>(i), static_cast<std::size_t>(m))) == tau) ++count;
  }
  return count;
}

PatternWord rising_drop_pattern(int k) {
  if (k < 2) throw DomainError("rising_drop_pattern requires k >= 2");
  std::vector<int> v;
  for (int x = 2; x <= k; ++x) v.push_back(x);
  v.push_back(1);
  return Permutation(std::move(v));
}

std::int64_t maximal_run_drop_count(const Permutation& pi, int k) {
  if (k < 2) throw DomainError("maximal_run_drop_count requires k >= 2");
  std::int64_t count = 0;
  int run = 1;
  for (int i = 1; i < pi.size(); ++i) {
    if (pi.at(i) < pi.at(i + 1)) {
      ++run;
    } else {
      if (run >= k - 1) ++count;
      run = 1;
    }
  }
  return count;
}

int lis_from(const Permutation& pi, int start) {
  const int n = pi.size();
  if (start < 1 || start > n) throw DomainError("lis_from: start outside 1..n");
  std::vector<int> best(static_cast<std::size_t>(n) + 1, 1);
  for (int i = n; i >= start; --i) {
    for (int j = i + 1; j <= n; ++j) {
      if (pi.at(j) > pi.at(i)) best[static_cast<std::size_t>(i)] = std::max(best[static_cast<std::size_t>(i)], best[static_cast<std::size_t>(j)] + 1);
    }
  }
  return best[static_cast<std::size_t>(start)];
}

namespace {

void check_bound(int n, const EnumerationLimits& limits) {
  if (n < 0) throw DomainError("enumeration size must be non-negative");
  if (n > limits.max_n) {
    throw ResourceLimitError("n = " + std::to_string(n) + " exceeds enumeration bound " + std::to_string(limits.max_n));
  }
}

// Lexicographic depth-first extension of 132-avoiding prefixes. A value v can
// be appended iff it lies in no interval (min of prefix before j, pi_j).
class AvoiderWalker {
 public:
  AvoiderWalker(int n, const std::function<void(const Permutation&)>& visit)
      : n_(n), visit_(visit), used_(static_cast<std::size_t>(n) + 1, false) {
    prefix_.reserve(static_cast<std::size_t>(n));
    low_.reserve(static_cast<std::size_t>(n));
  }

  void run(Shard shard) {
    if (n_ == 0) {
      if (shard.owns(1)) visit_(Permutation{});
      return;
    }
    for (int first = 1; first <= n_; ++first) {
      if (!shard.owns(first)) continue;
      push(first);
      descend();
      pop();
    }
  }

 private:
  bool allowed(int v) const {
    for (std::size_t j = 0; j < prefix_.size(); ++j) {
      if (low_[j] < v && v < prefix_[j]) return false;
    }
    return true;
  }

  void push(int v) {
    low_.push_back(prefix_.empty() ? n_ + 1 : std::min(low_.back(), prefix_.back()));
    prefix_.push_back(v);
    used_[static_cast<std::size_t>(v)] = true;
  }

  void pop() {
    used_[static_cast<std::size_t>(prefix_.back())] = false;
    prefix_.pop_back();
    low_.pop_back();
  }

  void descend() {
    if (static_cast<int>(prefix_.size()) == n_) {
      visit_(Permutation(prefix_));
      return;
    }
    for (int v = 1; v <= n_; ++v) {
      if (used_[static_cast<std::size_t>(v)] || !allowed(v)) continue;
      push(v);
      descend();
      pop();
    }
  }

  int n_;
  const std::function<void(const Permutation&)>& visit_;
  std::vector<int> prefix_;
  // low_[j] = min(prefix_[0..j-1]), or n+1 for j = 0.
  std::vector<int> low_;
  std::vector<bool> used_;
};

}  // namespace

void for_each_avoider(int n, const std::function<void(const Permutation&)>& visit, Shard shard,
                      EnumerationLimits limits) {
  check_bound(n, limits);
  AvoiderWalker(n, visit).run(shard);
}

std::vector<Permutation> enumerate_avoiders(int n, EnumerationLimits limits) {
  std::vector<Permutation> out;
  for_each_avoider(n, [&](const Permutation& p) { out.push_back(p); }, {}, limits);
  return out;
}

void for_each_permutation(int n, const std::function<void(const Permutation&)>& visit, EnumerationLimits limits) {
  check_bound(n, limits);
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  do {
    visit(Permutation(v));
  } while (std::next_permutation(v.begin(), v.end()));
}

}  // namespace avoid132
