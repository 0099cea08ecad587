#pragma once

#include <cstdint>
#include <map>

#include <boost/rational.hpp>

#include "seqent/dist.hpp"

namespace seqent {

using Rational = boost::rational<long long>;

// Truncated evaluation of an infinite series together with a certified
// upper bound on the omitted mass: the true sum lies within
// [value - tail_bound, value + tail_bound].
struct TruncationResult {
  double value = 0.0;
  double tail_bound = 0.0;
  std::uint64_t terms_used = 0;
};

/*
 * Tail bounds used below, all derived from the three power series
 *   1/(1-x)^2      = sum_{k>=1} k x^{k-1}
 *   log(1-x)       = -sum_{k>=1} x^k / k
 *   log(1-x)/(1-x) = -sum_{k>=1} h_k x^k
 * for q = 1 - p in [0,1) and truncation index K:
 *
 *   expected_h1:  sum_{k>K} p q^{k-1}/(k-1) <= p sum_{k>K} q^{k-1} = q^K
 *                 (bounding 1/(k-1) by 1),
 *   expected_h2:  h_{k-1} <= k-1 and the arithmetico-geometric closed form
 *                 sum_{j>=K} j q^j = q^K (K p + q)/p^2 give, after the outer
 *                 p_i factor, the per-class bound q^K (K p + q),
 *   expected_m1:  sum_{k>K} k q^{k-1} = q^K ((K+1) p + q)/p^2 gives, after
 *                 the outer p_i factor, q^K ((K+1) p + q).
 */

// Max over the three identities of |closed form - truncated sum to K terms|.
// Throws std::invalid_argument for |x| >= 1.
double series_identity_check(double x, std::uint64_t terms);

// E[H1] = sum_i sum_{k=2..K} p_i (1-p_i)^{k-1} / (k-1), truncated so the
// certified tail bound is <= tol. |value - entropy(dist)| <= tail_bound is
// the analytic unbiasedness certificate. Zero-probability classes
// contribute nothing and are skipped.
TruncationResult expected_h1(const CategoricalDistribution& dist, double tol);

// E[H2] = sum_i p_i sum_{k=1..K} h_{k-1} p_i (1-p_i)^{k-1}, same contract.
TruncationResult expected_h2(const CategoricalDistribution& dist, double tol);

// E[M1] = sum_i p_i sum_{k=1..K} k p_i (1-p_i)^{k-1}; the certificate is
// |value - class_number(dist)| <= tail_bound.
TruncationResult expected_m1(const CategoricalDistribution& dist, double tol);

// Exact rearrangement average: enumerates all distinct orderings of the
// first-sample multiset (counts r, size n) and of the subsequent-sample
// multiset (counts s padded to size m with classes outside A), computes
// (1/n) sum_{i in A} (L_i - F_i) for every pair of orderings, and returns
// |A| plus the exact average. Enumeration budget: n + m <= 10.
Rational m4_permutation_oracle_exact(std::uint64_t n,
                                     const std::map<int, std::uint64_t>& first_counts,
                                     std::uint64_t m,
                                     const std::map<int, std::uint64_t>& subsequent_counts);

// The m4 closed formula evaluated in exact rational arithmetic, for
// rational-exact comparison against the permutation average.
Rational m4_formula_exact(std::uint64_t n, const std::map<int, std::uint64_t>& first_counts,
                          std::uint64_t m, const std::map<int, std::uint64_t>& subsequent_counts);

// Floating-point view of m4_permutation_oracle_exact.
double m4_permutation_oracle(std::uint64_t n, const std::map<int, std::uint64_t>& first_counts,
                             std::uint64_t m, const std::map<int, std::uint64_t>& subsequent_counts);

}  // namespace seqent
