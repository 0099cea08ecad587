#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "seqent/sampler.hpp"

namespace seqent {

// Stable identifiers used by the CLI and in reports.
enum class EstimatorId { h1, h2, h3, m1, m2, m2cap, m3, m4, plugin };

std::string_view to_string(EstimatorId id);
std::optional<EstimatorId> parse_estimator(std::string_view name);

// h3, m2, m2cap, m3, m4 and plugin take a window / sample size n.
bool needs_window(EstimatorId id);

// True for the entropy estimators (h1, h2, h3, plugin); false for the
// class-number estimators (m1, m2, m2cap, m3, m4).
bool targets_entropy(EstimatorId id);

// One estimator evaluation.
struct EstimateRecord {
  EstimatorId id;
  double value = 0.0;
  std::uint64_t draws_consumed = 0;
};

// First index at which each class appears in one common stream; entry i-1
// holds N_i for class label i.
struct FirstOccurrenceTimes {
  std::vector<std::uint64_t> times;
};

// Shifted return times over one common stream: times[j-1] holds N^(j), the
// smallest k >= 1 such that w_{k+j} belongs to the class of w_j.
struct ReturnTimes {
  std::uint64_t window = 0;  // n
  std::vector<std::uint64_t> times;
};

// Capture-recapture summary. After the first n draws, sampling continues
// until every class observed among them (the set A) is observed at least
// once more; m is the offset of the draw completing that recollection.
// Vectors are parallel to `observed`, which is sorted ascending.
struct CaptureRecord {
  std::uint64_t first_size = 0;           // n
  std::uint64_t subsequent_size = 0;      // m = max_i L_i
  std::vector<int> observed;              // A
  std::vector<std::uint64_t> first_occurrence;    // F_i in 1..n
  std::vector<std::uint64_t> recollect_offset;    // L_i in 1..m
  std::vector<std::uint64_t> first_count;         // r_i >= 1, sums to n
  std::vector<std::uint64_t> recollect_count;     // s_i >= 1, sums to <= m
};

// Empirical counts of a fixed-size sample, k_i summing to n.
struct PluginCounts {
  std::uint64_t n = 0;
  std::vector<std::uint64_t> counts;  // entry i-1 is k_i for class label i
};

// --- waiting-time primitives -----------------------------------------------

// Scans until all `class_count` classes have appeared. Labels must lie in
// 1..class_count (PreconditionViolated otherwise). Consumes max_i N_i draws.
FirstOccurrenceTimes first_occurrence_times(SampleSource& source, std::size_t class_count);

// Buffers the realized stream once; every j-indexed search reads the shared
// buffer, so windows overlap exactly as defined and the telescoping identity
// holds per realization. Consumes max_j (j + N^(j)) draws.
ReturnTimes collect_return_times(SampleSource& source, std::uint64_t window);

// --- entropy estimators -----------------------------------------------------

// H1 = sum_i I{N_i >= 2} / (N_i - 1). Requires the full class list known in
// advance; the caller must reject distributions with zero-probability
// declared classes (an unreachable class guarantees a cap hit).
EstimateRecord h1_estimate(SampleSource& source, std::size_t class_count);

// H2 = h_{N-1} where N is the return time of the class of w_1.
// Consumes N + 1 draws.
EstimateRecord h2_estimate(SampleSource& source);

// H3 = (1/n) sum_j h_{N^(j)-1}; reduces to h2 at n = 1.
EstimateRecord h3_estimate(SampleSource& source, std::uint64_t window);

// --- class-number estimators -------------------------------------------------

// M1 = N, the return time itself. Consumes N + 1 draws.
EstimateRecord m1_estimate(SampleSource& source);

// M2 = (1/n) sum_j N^(j); reduces to m1 at n = 1.
EstimateRecord m2_direct(SampleSource& source, std::uint64_t window);

// Runs the capture-recapture stopping rule; consumes exactly n + m draws.
CaptureRecord capture_recapture(SampleSource& source, std::uint64_t first_size);

// M2 in telescoped form, |A| + (1/n) sum_{i in A} (L_i - F_i). Equals
// m2_direct on the identical realized sequence, exactly.
double m2_telescoped(const CaptureRecord& record);

// M3 = number of distinct labels among the first n samples.
std::size_t m3_estimate(std::span<const int> samples);

// M4 = |A| + (1/n) sum_{i in A} ((m+1)/(s_i+1) - (n+1)/(r_i+1)), the exact
// average of the telescoped form over independent rearrangements of the two
// sample multisets.
double m4_estimate(const CaptureRecord& record);

// Same formula from externally recorded counts (usable when draw order was
// not kept). Throws PreconditionViolated if some class has r_i >= 1 but
// s_i = 0, or the counts are inconsistent with n and m.
double m4_from_counts(std::uint64_t n, const std::map<int, std::uint64_t>& first_counts,
                      std::uint64_t m, const std::map<int, std::uint64_t>& subsequent_counts);

// --- plug-in baseline --------------------------------------------------------

// -sum_{k_i > 0} (k_i/n) ln(k_i/n); the negatively biased naive estimator.
double plugin_entropy(const PluginCounts& counts);

// Draws exactly n samples and tallies them over 1..class_count.
PluginCounts tally_counts(SampleSource& source, std::uint64_t n, std::size_t class_count);

}  // namespace seqent
