#include "seqent/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "seqent/harmonic.hpp"
#include "seqent/sampler.hpp"

namespace seqent {

namespace {

// Terms evaluated per class before giving up and reporting the best
// achieved bound (reachable only for extremely small probabilities).
constexpr std::uint64_t kMaxTermsPerClass = 10'000'000;

constexpr std::uint64_t kEnumerationBudget = 10;  // n + m

struct ClassSeries {
  double value = 0.0;
  double bound = 0.0;
  std::uint64_t terms = 0;
};

// Sums term(k, q^{k-1}) for k = 1, 2, ... until the certified bound for
// truncating after k terms drops to per_class_tol or the budget runs out.
template <typename Term, typename Bound>
ClassSeries sum_until(double q, double per_class_tol, Term term, Bound bound) {
  ClassSeries out;
  double q_power = 1.0;  // q^{k-1}
  for (std::uint64_t k = 1; k <= kMaxTermsPerClass; ++k) {
    out.value += term(k, q_power);
    q_power *= q;
    ++out.terms;
    out.bound = bound(k, q_power);  // q_power is now q^k
    if (out.bound <= per_class_tol) break;
  }
  return out;
}

void validate_counts(std::uint64_t n, const std::map<int, std::uint64_t>& first_counts,
                     std::uint64_t m, const std::map<int, std::uint64_t>& subsequent_counts) {
  if (n == 0 || m == 0) {
    throw PreconditionViolated("both sample sizes must be >= 1");
  }
  std::uint64_t first_total = 0;
  bool any = false;
  for (const auto& [label, count] : first_counts) {
    if (count == 0) continue;
    any = true;
    first_total += count;
    auto it = subsequent_counts.find(label);
    if (it == subsequent_counts.end() || it->second == 0) {
      throw PreconditionViolated("class " + std::to_string(label) +
                                 " observed in the first sample but not the subsequent one");
    }
  }
  if (!any) {
    throw PreconditionViolated("first sample counts are all zero");
  }
  if (first_total != n) {
    throw PreconditionViolated("first sample counts sum to " + std::to_string(first_total) +
                               ", expected n = " + std::to_string(n));
  }
  std::uint64_t subsequent_total = 0;
  for (const auto& [label, count] : subsequent_counts) subsequent_total += count;
  if (subsequent_total > m) {
    throw PreconditionViolated("subsequent sample counts sum to " +
                               std::to_string(subsequent_total) + ", above m = " +
                               std::to_string(m));
  }
}

}  // namespace

double series_identity_check(double x, std::uint64_t terms) {
  if (!(std::abs(x) < 1.0)) {
    throw std::invalid_argument("series identities need |x| < 1");
  }
  double geometric_sq = 0.0;  // sum k x^{k-1}
  double log_series = 0.0;    // sum x^k / k
  double log_over = 0.0;      // sum h_k x^k
  double x_power = 1.0;       // x^{k-1}
  for (std::uint64_t k = 1; k <= terms; ++k) {
    geometric_sq += static_cast<double>(k) * x_power;
    x_power *= x;  // now x^k
    log_series += x_power / static_cast<double>(k);
    log_over += harmonic(k) * x_power;
  }
  double one_minus = 1.0 - x;
  double d1 = std::abs(1.0 / (one_minus * one_minus) - geometric_sq);
  double d2 = std::abs(std::log(one_minus) + log_series);
  double d3 = std::abs(std::log(one_minus) / one_minus + log_over);
  return std::max({d1, d2, d3});
}

TruncationResult expected_h1(const CategoricalDistribution& dist, double tol) {
  if (!(tol > 0.0)) {
    throw std::invalid_argument("tolerance must be positive");
  }
  double per_class_tol = tol / static_cast<double>(class_number(dist));
  TruncationResult total;
  for (double p : dist.probs()) {
    if (p == 0.0) continue;
    double q = 1.0 - p;
    // sum_{k=2..} p q^{k-1} / (k-1); tail after K terms is q^K
    ClassSeries series = sum_until(
        q, per_class_tol,
        [&](std::uint64_t k, double q_power) {
          return k < 2 ? 0.0 : p * q_power / static_cast<double>(k - 1);
        },
        [&](std::uint64_t, double q_power_next) { return q_power_next; });
    total.value += series.value;
    total.tail_bound += series.bound;
    total.terms_used += series.terms;
  }
  return total;
}

TruncationResult expected_h2(const CategoricalDistribution& dist, double tol) {
  if (!(tol > 0.0)) {
    throw std::invalid_argument("tolerance must be positive");
  }
  double per_class_tol = tol / static_cast<double>(class_number(dist));
  TruncationResult total;
  for (double p : dist.probs()) {
    if (p == 0.0) continue;
    double q = 1.0 - p;
    // outer p_i folded into the bound: q^K (K p + q)
    ClassSeries series = sum_until(
        q, per_class_tol,
        [&](std::uint64_t k, double q_power) { return harmonic(k - 1) * p * q_power; },
        [&](std::uint64_t k, double q_power_next) {
          return q_power_next * (static_cast<double>(k) * p + q);
        });
    total.value += p * series.value;
    total.tail_bound += series.bound;
    total.terms_used += series.terms;
  }
  return total;
}

TruncationResult expected_m1(const CategoricalDistribution& dist, double tol) {
  if (!(tol > 0.0)) {
    throw std::invalid_argument("tolerance must be positive");
  }
  double per_class_tol = tol / static_cast<double>(class_number(dist));
  TruncationResult total;
  for (double p : dist.probs()) {
    if (p == 0.0) continue;
    double q = 1.0 - p;
    ClassSeries series = sum_until(
        q, per_class_tol,
        [&](std::uint64_t k, double q_power) { return static_cast<double>(k) * p * q_power; },
        [&](std::uint64_t k, double q_power_next) {
          return q_power_next * (static_cast<double>(k + 1) * p + q);
        });
    total.value += p * series.value;
    total.tail_bound += series.bound;
    total.terms_used += series.terms;
  }
  return total;
}

Rational m4_permutation_oracle_exact(std::uint64_t n,
                                     const std::map<int, std::uint64_t>& first_counts,
                                     std::uint64_t m,
                                     const std::map<int, std::uint64_t>& subsequent_counts) {
  validate_counts(n, first_counts, m, subsequent_counts);
  if (n + m > kEnumerationBudget) {
    throw std::invalid_argument("enumeration budget n + m <= " +
                                std::to_string(kEnumerationBudget) + " exceeded");
  }

  std::vector<int> observed;  // A
  std::vector<int> first_sequence;
  for (const auto& [label, count] : first_counts) {
    if (count == 0) continue;
    observed.push_back(label);
    first_sequence.insert(first_sequence.end(), count, label);
  }
  int filler = observed.back() + 1;
  for (const auto& [label, count] : subsequent_counts) {
    filler = std::max(filler, label + 1);
  }
  std::vector<int> subsequent_sequence;
  for (const auto& [label, count] : subsequent_counts) {
    subsequent_sequence.insert(subsequent_sequence.end(), count, label);
  }
  subsequent_sequence.insert(subsequent_sequence.end(), m - subsequent_sequence.size(), filler);

  // Sum of first-occurrence positions of the classes of A in one ordering.
  auto occurrence_sum = [&](const std::vector<int>& sequence) {
    long long sum = 0;
    for (int label : observed) {
      for (std::size_t pos = 0; pos < sequence.size(); ++pos) {
        if (sequence[pos] == label) {
          sum += static_cast<long long>(pos + 1);
          break;
        }
      }
    }
    return sum;
  };

  // next_permutation over the sorted multisets visits every distinct
  // ordering exactly once (multinomial count, no duplicate enumeration).
  std::sort(first_sequence.begin(), first_sequence.end());
  std::sort(subsequent_sequence.begin(), subsequent_sequence.end());
  std::vector<long long> first_sums;
  do {
    first_sums.push_back(occurrence_sum(first_sequence));
  } while (std::next_permutation(first_sequence.begin(), first_sequence.end()));
  std::vector<long long> subsequent_sums;
  do {
    subsequent_sums.push_back(occurrence_sum(subsequent_sequence));
  } while (std::next_permutation(subsequent_sequence.begin(), subsequent_sequence.end()));

  long long total = 0;
  for (long long sum_f : first_sums) {
    for (long long sum_l : subsequent_sums) {
      total += sum_l - sum_f;
    }
  }
  long long pairs = static_cast<long long>(first_sums.size()) *
                    static_cast<long long>(subsequent_sums.size());
  return Rational(static_cast<long long>(observed.size())) +
         Rational(total, static_cast<long long>(n) * pairs);
}

Rational m4_formula_exact(std::uint64_t n, const std::map<int, std::uint64_t>& first_counts,
                          std::uint64_t m, const std::map<int, std::uint64_t>& subsequent_counts) {
  validate_counts(n, first_counts, m, subsequent_counts);
  Rational correction(0);
  long long observed = 0;
  for (const auto& [label, count] : first_counts) {
    if (count == 0) continue;
    ++observed;
    long long recollected = static_cast<long long>(subsequent_counts.at(label));
    correction += Rational(static_cast<long long>(m) + 1, recollected + 1) -
                  Rational(static_cast<long long>(n) + 1, static_cast<long long>(count) + 1);
  }
  return Rational(observed) + correction / Rational(static_cast<long long>(n));
}

double m4_permutation_oracle(std::uint64_t n, const std::map<int, std::uint64_t>& first_counts,
                             std::uint64_t m, const std::map<int, std::uint64_t>& subsequent_counts) {
  Rational exact = m4_permutation_oracle_exact(n, first_counts, m, subsequent_counts);
  return boost::rational_cast<double>(exact);
}

}  // namespace seqent
