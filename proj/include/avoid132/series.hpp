#pragma once

#include <vector>

#include "avoid132/counting.hpp"

namespace avoid132 {

inline constexpr int kMaxSeriesDegree = 512;

/// Integer-coefficient power series truncated after x^degree. All
/// arithmetic is exact on coefficients 0..degree.
class TruncatedSeries {
 public:
  /// Zero series. Throws ResourceLimitError when degree > kMaxSeriesDegree.
  explicit TruncatedSeries(int degree);

  static TruncatedSeries monomial(int degree, int power, Integer coefficient = 1);
  static TruncatedSeries polynomial(int degree, const std::vector<Integer>& coefficients);
  /// 1 / (1 - x^step), step >= 1.
  static TruncatedSeries geometric(int degree, int step);

  int degree() const noexcept { return static_cast<int>(coefficients_.size()) - 1; }
  /// Throws ResourceLimitError for powers above the truncation degree.
  const Integer& coefficient(int power) const;

  TruncatedSeries pow(int exponent) const;

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<Integer> coefficients_;
};

struct LemmaA1Sides {
  /// [x^p] x * ((1-x^{l+1})^q / (1-x)^q) * (x / (1-x^{l+1})) * ((1-x^l)/(1-x) - l x^l)
  Integer series_coefficient;
  /// sum_{i=0}^{l-1} (i+1) kappa_l(p-i-2, q-1)
  Integer kappa_sum;
};

/// Both sides of the truncated-series identity. Requires p, q, l >= 0;
/// throws ResourceLimitError when p exceeds kMaxSeriesDegree.
LemmaA1Sides lemma_a1_sides(int p, int q, int l);
bool lemma_a1_check(int p, int q, int l);

}  // namespace avoid132
