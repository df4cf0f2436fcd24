#include "avoid132/decomposition.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>

#include "avoid132/errors.hpp"

namespace avoid132 {

std::string_view to_string(DecompositionKind kind) {
  switch (kind) {
    case DecompositionKind::kIrd: return "ird";
    case DecompositionKind::kDrd: return "drd";
    case DecompositionKind::kVcis: return "vcis";
    case DecompositionKind::kLde: return "lde";
  }
  return "?";
}

DecompositionKind parse_decomposition_kind(std::string_view name) {
  if (name == "ird") return DecompositionKind::kIrd;
  if (name == "drd") return DecompositionKind::kDrd;
  if (name == "vcis") return DecompositionKind::kVcis;
  if (name == "lde") return DecompositionKind::kLde;
  throw ParseError("unknown decomposition '" + std::string(name) + "'", 0);
}

LengthDistribution LengthDistribution::from_lengths(std::vector<int> lengths) {
  for (int x : lengths) {
    if (x <= 0) throw DomainError("length distribution parts must be positive");
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  LengthDistribution d;
  d.parts_ = std::move(lengths);
  return d;
}

LengthDistribution LengthDistribution::parse(std::string_view text) {
  std::vector<int> parts;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == ',' || std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw ParseError(std::string("unexpected character '") + text[i] + "' in distribution", i);
    }
    const std::size_t start = i;
    int value = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      value = value * 10 + (text[i] - '0');
      if (value > 1'000'000) throw ParseError("distribution part too large", start);
      ++i;
    }
    if (value == 0) throw ParseError("distribution parts must be positive", start);
    parts.push_back(value);
  }
  return from_lengths(std::move(parts));
}

int LengthDistribution::sum() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string LengthDistribution::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out << ',';
    out << parts_[i];
  }
  return out.str();
}

namespace {

Segment segment_at(const Permutation& pi, std::vector<int> positions) {
  Segment s;
  s.values.reserve(positions.size());
  for (int p : positions) s.values.push_back(pi.at(p));
  s.positions = std::move(positions);
  return s;
}

Decomposition runs(const Permutation& pi, DecompositionKind kind, bool increasing) {
  Decomposition d{kind, {}};
  std::vector<int> current;
  for (int i = 1; i <= pi.size(); ++i) {
    if (!current.empty()) {
      const bool continues = increasing ? pi.at(i) > pi.at(i - 1) : pi.at(i) < pi.at(i - 1);
      if (!continues) {
        d.segments.push_back(segment_at(pi, std::move(current)));
        current.clear();
      }
    }
    current.push_back(i);
  }
  if (!current.empty()) d.segments.push_back(segment_at(pi, std::move(current)));
  return d;
}

}  // namespace

Decomposition ird(const Permutation& pi) { return runs(pi, DecompositionKind::kIrd, true); }

Decomposition drd(const Permutation& pi) { return runs(pi, DecompositionKind::kDrd, false); }

Decomposition vcis(const Permutation& pi) {
  const int n = pi.size();
  std::vector<int> pos(static_cast<std::size_t>(n) + 2, 0);
  for (int i = 1; i <= n; ++i) pos[static_cast<std::size_t>(pi.at(i))] = i;

  // v and v+1 share a segment iff v appears before v+1.
  Decomposition d{DecompositionKind::kVcis, {}};
  int v = 1;
  while (v <= n) {
    std::vector<int> positions{pos[static_cast<std::size_t>(v)]};
    while (v < n && pos[static_cast<std::size_t>(v)] < pos[static_cast<std::size_t>(v + 1)]) {
      ++v;
      positions.push_back(pos[static_cast<std::size_t>(v)]);
    }
    d.segments.push_back(segment_at(pi, std::move(positions)));
    ++v;
  }
  std::sort(d.segments.begin(), d.segments.end(),
            [](const Segment& a, const Segment& b) { return a.positions.front() < b.positions.front(); });
  return d;
}

namespace {

void envelope_layer(const Permutation& pi, int left, int right, std::vector<Segment>& out) {
  int end = right;
  while (end >= left) {
    std::vector<int> poles;
    int tallest = 0;
    for (int p = end; p >= left; --p) {
      if (pi.at(p) > tallest) {
        tallest = pi.at(p);
        poles.push_back(p);
      }
    }
    std::reverse(poles.begin(), poles.end());
    for (std::size_t g = 0; g + 1 < poles.size(); ++g) {
      envelope_layer(pi, poles[g] + 1, poles[g + 1] - 1, out);
    }
    end = poles.front() - 1;
    out.push_back(segment_at(pi, std::move(poles)));
  }
}

}  // namespace

Decomposition lde(const Permutation& pi) {
  if (!avoids_132(pi)) throw DomainError("LDE is defined only for 132-avoiding permutations");
  Decomposition d{DecompositionKind::kLde, {}};
  envelope_layer(pi, 1, pi.size(), d.segments);
  std::sort(d.segments.begin(), d.segments.end(),
            [](const Segment& a, const Segment& b) { return a.values.front() > b.values.front(); });
  return d;
}

Decomposition decompose(const Permutation& pi, DecompositionKind kind) {
  switch (kind) {
    case DecompositionKind::kIrd: return ird(pi);
    case DecompositionKind::kDrd: return drd(pi);
    case DecompositionKind::kVcis: return vcis(pi);
    case DecompositionKind::kLde: return lde(pi);
  }
  throw DomainError("unknown decomposition kind");
}

LengthDistribution length_distribution(const Decomposition& d) {
  std::vector<int> lengths;
  lengths.reserve(d.segments.size());
  for (const auto& s : d.segments) lengths.push_back(s.size());
  return LengthDistribution::from_lengths(std::move(lengths));
}

std::vector<LengthDistribution> integer_partitions(int n) {
  std::vector<LengthDistribution> out;
  std::vector<int> parts;
  std::function<void(int, int)> rec = [&](int remaining, int cap) {
    if (remaining == 0) {
      out.push_back(LengthDistribution::from_lengths(parts));
      return;
    }
    for (int p = std::min(remaining, cap); p >= 1; --p) {
      parts.push_back(p);
      rec(remaining - p, p);
      parts.pop_back();
    }
  };
  if (n < 0) return out;
  rec(n, n);
  return out;
}

}  // namespace avoid132
