#include "avoid132/series.hpp"

#include <algorithm>

#include "avoid132/errors.hpp"

namespace avoid132 {

TruncatedSeries::TruncatedSeries(int degree) {
  if (degree < 0) throw DomainError("series degree must be non-negative");
  if (degree > kMaxSeriesDegree) {
    throw ResourceLimitError("series degree " + std::to_string(degree) + " exceeds bound " +
                             std::to_string(kMaxSeriesDegree));
  }
  coefficients_.assign(static_cast<std::size_t>(degree) + 1, 0);
}

TruncatedSeries TruncatedSeries::monomial(int degree, int power, Integer coefficient) {
  TruncatedSeries s(degree);
  if (power >= 0 && power <= degree) s.coefficients_[static_cast<std::size_t>(power)] = std::move(coefficient);
  return s;
}

TruncatedSeries TruncatedSeries::polynomial(int degree, const std::vector<Integer>& coefficients) {
  TruncatedSeries s(degree);
  for (std::size_t i = 0; i < coefficients.size() && i <= static_cast<std::size_t>(degree); ++i) {
    s.coefficients_[i] = coefficients[i];
  }
  return s;
}

TruncatedSeries TruncatedSeries::geometric(int degree, int step) {
  if (step < 1) throw DomainError("geometric series step must be positive");
  TruncatedSeries s(degree);
  for (int p = 0; p <= degree; p += step) s.coefficients_[static_cast<std::size_t>(p)] = 1;
  return s;
}

const Integer& TruncatedSeries::coefficient(int power) const {
  if (power < 0 || power > degree()) {
    throw ResourceLimitError("coefficient x^" + std::to_string(power) + " outside truncation degree " +
                             std::to_string(degree()));
  }
  return coefficients_[static_cast<std::size_t>(power)];
}

TruncatedSeries TruncatedSeries::pow(int exponent) const {
  if (exponent < 0) throw DomainError("negative series exponent");
  TruncatedSeries result = monomial(degree(), 0);
  for (int e = 0; e < exponent; ++e) result = result * *this;
  return result;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries r(std::min(a.degree(), b.degree()));
  for (int p = 0; p <= r.degree(); ++p) r.coefficients_[static_cast<std::size_t>(p)] = a.coefficient(p) + b.coefficient(p);
  return r;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries r(std::min(a.degree(), b.degree()));
  for (int p = 0; p <= r.degree(); ++p) r.coefficients_[static_cast<std::size_t>(p)] = a.coefficient(p) - b.coefficient(p);
  return r;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries r(std::min(a.degree(), b.degree()));
  for (int i = 0; i <= r.degree(); ++i) {
    const auto& x = a.coefficients_[static_cast<std::size_t>(i)];
    if (x == 0) continue;
    for (int j = 0; i + j <= r.degree(); ++j) {
      r.coefficients_[static_cast<std::size_t>(i + j)] += x * b.coefficients_[static_cast<std::size_t>(j)];
    }
  }
  return r;
}

LemmaA1Sides lemma_a1_sides(int p, int q, int l) {
  if (p < 0 || q < 0 || l < 0) throw DomainError("lemma_a1 requires p, q, l >= 0");
  const int d = p;
  // One factor (1 - x^{l+1}) cancels against the denominator; when q = 0
  // the remaining power is -1 and is expanded as a geometric series.
  const TruncatedSeries numerator_power =
      q >= 1 ? (TruncatedSeries::monomial(d, 0) - TruncatedSeries::monomial(d, l + 1)).pow(q - 1)
             : TruncatedSeries::geometric(d, l + 1);
  const TruncatedSeries denominator = TruncatedSeries::geometric(d, 1).pow(q);
  std::vector<Integer> bracket(static_cast<std::size_t>(l) + 1, 0);
  for (int i = 0; i < l; ++i) bracket[static_cast<std::size_t>(i)] = 1;
  bracket[static_cast<std::size_t>(l)] -= l;
  const TruncatedSeries series = TruncatedSeries::monomial(d, 2) * numerator_power * denominator *
                                 TruncatedSeries::polynomial(d, bracket);

  LemmaA1Sides sides{series.coefficient(p), 0};
  for (int i = 0; i <= l - 1; ++i) sides.kappa_sum += Integer(i + 1) * kappa(l, p - i - 2, q - 1);
  return sides;
}

bool lemma_a1_check(int p, int q, int l) {
  const auto sides = lemma_a1_sides(p, q, l);
  return sides.series_coefficient == sides.kappa_sum;
}

}  // namespace avoid132
