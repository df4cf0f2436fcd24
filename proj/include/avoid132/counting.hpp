#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace avoid132 {

/// Exact integers. Counters return non-negative values; signed intermediate
/// sums share the same type.
using Integer = boost::multiprecision::cpp_int;
using Nat = Integer;

std::string to_string(const Integer& x);

/// num / den, throwing std::logic_error if the division is not exact.
Integer exact_div(const Integer& num, const Integer& den);

/// Binomial coefficient with the conventions every formula here relies on:
/// b < 0 gives 0; b = 0 gives 1 (also for a < 0); otherwise a < 0 or b > a
/// gives 0.
Nat binomial(std::int64_t a, std::int64_t b);

Nat catalan(int n);

/// N(n,k) = C(n,k) C(n,k-1) / n, with N(0,0) = 1 and N(0,x) = 0 otherwise.
Nat narayana(int n, int k);
/// N_i(n,j) = (i/n) C(n,j) C(n-i-1, j-i): Dyck paths of semilength n with
/// i returns and j peaks. N_i(0,j) = [i = j = 0].
Nat gen_narayana(int i, int n, int j);

/// kappa_t(n,m): weak compositions of n into m parts each at most t, by
/// inclusion-exclusion. For m < 0 this is the coefficient of x^n in
/// ((1 - x^{t+1}) / (1 - x))^m, which may be negative; n < 0 gives 0.
Integer kappa(int t, int n, int m);
/// Same count for m >= 0 by the part-by-part recurrence.
Nat kappa_by_recurrence(int t, int n, int m);

/// Compositions of n into k positive parts each at most w (Abramson).
Nat bounded_compositions(int n, int k, int w);
/// Same count by the part-by-part recurrence.
Nat bounded_compositions_by_recurrence(int n, int k, int w);

/// 132-avoiders of length n starting with i and having k descents.
/// Requires 1 <= i <= n.
Nat count_start_descents(int n, int i, int k);

/// 132-avoiders of length n starting with i, ending with j (i != j) and
/// having k descents. For i < j this is N_{n-i}(n-1, n-k) when j = n and 0
/// otherwise; for i > j it is
///   sum_{m=0}^{k-1} N_{n+1-i}(n-j, n-j-m) N(j-1, j+m-k+1).
Nat count_start_end_descents(int n, int i, int j, int k);

/// Plane trees of n edges with p even-level vertices of outdegree at most h
/// and q odd-level vertices of outdegree at most l; equivalently
/// 132-avoiders with p increasing runs (the last of length <= h, the others
/// <= h+1) and q LDE groups of length <= l+1. Zero unless p + q = n + 1.
Nat count_bounded_runs(int n, int p, int q, int h, int l);

/// 132-avoiders whose last increasing run has length at most h and whose
/// other runs have length at most h+1. Requires n >= 1, h >= 1.
Nat count_bounded_ir(int n, int h);

/// 132-avoiders of length n with m occurrences of the consecutive pattern
/// 2 3 ... k 1. Requires k > 2.
Nat count_consec_pattern(int n, int k, int m);

}  // namespace avoid132
