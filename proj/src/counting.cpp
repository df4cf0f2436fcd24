#include "avoid132/counting.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

#include "avoid132/errors.hpp"

namespace avoid132 {

std::string to_string(const Integer& x) { return x.str(); }

Integer exact_div(const Integer& num, const Integer& den) {
  if (den == 0) throw std::logic_error("division by zero in a counting formula");
  Integer q;
  Integer r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (r != 0) throw std::logic_error("inexact division " + num.str() + " / " + den.str());
  return q;
}

namespace {

constexpr std::int64_t kPascalRows = 160;

const std::vector<std::vector<Nat>>& pascal() {
  static std::once_flag once;
  static std::vector<std::vector<Nat>> rows;
  std::call_once(once, [] {
    rows.resize(kPascalRows + 1);
    for (std::int64_t a = 0; a <= kPascalRows; ++a) {
      auto& row = rows[static_cast<std::size_t>(a)];
      row.resize(static_cast<std::size_t>(a) + 1);
      row.front() = row.back() = 1;
      for (std::int64_t b = 1; b < a; ++b) {
        const auto& prev = rows[static_cast<std::size_t>(a - 1)];
        row[static_cast<std::size_t>(b)] = prev[static_cast<std::size_t>(b - 1)] + prev[static_cast<std::size_t>(b)];
      }
    }
  });
  return rows;
}

}  // namespace

Nat binomial(std::int64_t a, std::int64_t b) {
  if (b < 0) return 0;
  if (b == 0) return 1;
  if (a < 0 || b > a) return 0;
  if (a <= kPascalRows) return pascal()[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
  if (b > a - b) b = a - b;
  Nat r = 1;
  for (std::int64_t i = 1; i <= b; ++i) {
    r *= a - b + i;
    r /= i;
  }
  return r;
}

Nat catalan(int n) {
  if (n < 0) throw DomainError("catalan requires n >= 0");
  return exact_div(binomial(2 * n, n), n + 1);
}

Nat narayana(int n, int k) {
  if (n < 0) return 0;
  if (n == 0) return k == 0 ? 1 : 0;
  return exact_div(binomial(n, k) * binomial(n, k - 1), n);
}

Nat gen_narayana(int i, int n, int j) {
  if (n < 0) return 0;
  if (n == 0) return i == 0 && j == 0 ? 1 : 0;
  return exact_div(Integer(i) * binomial(n, j) * binomial(n - i - 1, j - i), n);
}

Integer kappa(int t, int n, int m) {
  if (t < 0) throw DomainError("kappa requires t >= 0");
  if (n < 0) return 0;
  if (m == 0) return n == 0 ? 1 : 0;
  Integer total = 0;
  if (m < 0) {
    // (1-x)^r * sum_b C(r+b-1, b) x^{(t+1)b}, r = -m.
    const int r = -m;
    for (int a = 0; a <= r && a <= n; ++a) {
      if ((n - a) % (t + 1) != 0) continue;
      const int b = (n - a) / (t + 1);
      const Integer term = binomial(r, a) * binomial(r + b - 1, b);
      total += a % 2 == 0 ? term : Integer(-term);
    }
    return total;
  }
  for (std::int64_t j = 0; j <= m && j * (t + 1) <= n; ++j) {
    const Integer term = binomial(m, j) * binomial(n - j * (t + 1) + m - 1, m - 1);
    total += j % 2 == 0 ? term : Integer(-term);
  }
  return total;
}

Nat kappa_by_recurrence(int t, int n, int m) {
  if (t < 0 || m < 0) throw DomainError("kappa_by_recurrence requires t, m >= 0");
  if (n < 0) return 0;
  // ways[s] = compositions of s using the parts placed so far.
  std::vector<Nat> ways(static_cast<std::size_t>(n) + 1, 0);
  ways[0] = 1;
  for (int part = 0; part < m; ++part) {
    std::vector<Nat> next(ways.size(), 0);
    for (int s = 0; s <= n; ++s) {
      for (int a = 0; a <= t && a <= s; ++a) next[static_cast<std::size_t>(s)] += ways[static_cast<std::size_t>(s - a)];
    }
    ways = std::move(next);
  }
  return ways[static_cast<std::size_t>(n)];
}

Nat bounded_compositions(int n, int k, int w) {
  if (k < 0) throw DomainError("bounded_compositions requires k >= 0");
  if (k == 0 || w <= 0) return n == 0 && k == 0 ? 1 : 0;
  Integer total = 0;
  for (std::int64_t j = 0; j <= k && n - j * w >= k; ++j) {
    const Integer term = binomial(k, j) * binomial(n - j * w - 1, k - 1);
    total += j % 2 == 0 ? term : Integer(-term);
  }
  return total;
}

Nat bounded_compositions_by_recurrence(int n, int k, int w) {
  if (k < 0) throw DomainError("bounded_compositions requires k >= 0");
  if (n < 0) return 0;
  std::vector<Nat> ways(static_cast<std::size_t>(n) + 1, 0);
  ways[0] = 1;
  for (int part = 0; part < k; ++part) {
    std::vector<Nat> next(ways.size(), 0);
    for (int s = 0; s <= n; ++s) {
      for (int a = 1; a <= w && a <= s; ++a) next[static_cast<std::size_t>(s)] += ways[static_cast<std::size_t>(s - a)];
    }
    ways = std::move(next);
  }
  return ways[static_cast<std::size_t>(n)];
}

Nat count_start_descents(int n, int i, int k) {
  if (i < 1 || i > n) throw DomainError("count_start_descents requires 1 <= i <= n");
  return exact_div(Integer(n + 1 - i) * binomial(n, n + 1 - k) * binomial(i - 2, i - k), n);
}

Nat count_start_end_descents(int n, int i, int j, int k) {
  if (i < 1 || i > n || j < 1 || j > n) throw DomainError("count_start_end_descents requires 1 <= i, j <= n");
  if (i == j) throw DomainError("count_start_end_descents requires i != j");
  if (i < j) return j == n ? gen_narayana(n - i, n - 1, n - k) : Nat(0);
  Nat total = 0;
  for (int m = 0; m <= k - 1; ++m) {
    total += gen_narayana(n + 1 - i, n - j, n - j - m) * narayana(j - 1, j + m - k + 1);
  }
  return total;
}

Nat count_bounded_runs(int n, int p, int q, int h, int l) {
  if (n < 0 || p < 0 || q < 0 || h < 0 || l < 0) throw DomainError("count_bounded_runs requires non-negative parameters");
  if (p + q != n + 1) return 0;
  Integer first_sum = 0;
  for (int i = 0; i <= l - 1; ++i) first_sum += Integer(i + 1) * kappa(l, p - i - 2, q - 1);
  Integer second_sum = 0;
  for (int j = 0; j <= h - 1; ++j) second_sum += Integer(j + 1) * kappa(h, q - j - 1, p - 1);
  const Integer value = kappa(l, p - 1, q) * kappa(h, q, p) - first_sum * second_sum;
  if (value < 0) throw std::logic_error("count_bounded_runs produced a negative count");
  return value;
}

Nat count_bounded_ir(int n, int h) {
  if (n < 1 || h < 1) throw DomainError("count_bounded_ir requires n >= 1 and h >= 1");
  Integer total = 0;
  for (int k = 1; k <= n; ++k) {
    Integer inner = 0;
    for (std::int64_t i = 0; i * (h + 1) <= n + 1 - k; ++i) {
      const Integer term = binomial(k, i) * binomial(n - i * (h + 1), k - 1);
      inner += i % 2 == 0 ? term : Integer(-term);
    }
    total += binomial(n, k) * inner;
  }
  return exact_div(total, n);
}

Nat count_consec_pattern(int n, int k, int m) {
  if (k <= 2) throw DomainError("count_consec_pattern requires k > 2");
  if (n < 0 || m < 0) throw DomainError("count_consec_pattern requires n, m >= 0");
  if (n == 0) return m == 0 ? 1 : 0;
  Integer total = 0;
  for (int s = 0; s <= n; ++s) {
    for (int q = 0; q <= s - m; ++q) {
      Integer inner = 0;
      for (int j = 0; j <= q; ++j) {
        const Integer term = binomial(q, j) * binomial(n - s - std::int64_t{j + m} * (k - 3), m + q + 1);
        inner += j % 2 == 0 ? term : Integer(-term);
      }
      total += binomial(n, s) * binomial(s, m + q) * binomial(m + q, m) * inner;
    }
  }
  return exact_div(total, n);
}

}  // namespace avoid132
