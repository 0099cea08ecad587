#include "seqent/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "seqent/harmonic.hpp"

namespace seqent {

namespace {

constexpr std::string_view kNames[] = {"h1", "h2", "h3", "m1", "m2", "m2cap", "m3", "m4", "plugin"};

// Lazily buffered view of a stream so overlapping window searches can
// revisit earlier draws.
class BufferedSource {
 public:
  explicit BufferedSource(SampleSource& source) : source_(source) {}

  int at(std::uint64_t position) {  // 1-based
    while (buffer_.size() < position) buffer_.push_back(source_.next());
    return buffer_[position - 1];
  }

 private:
  SampleSource& source_;
  std::vector<int> buffer_;
};

std::uint64_t return_time(SampleSource& source) {
  int reference = source.next();
  std::uint64_t k = 1;
  while (source.next() != reference) ++k;
  return k;
}

}  // namespace

std::string_view to_string(EstimatorId id) { return kNames[static_cast<int>(id)]; }

std::optional<EstimatorId> parse_estimator(std::string_view name) {
  for (int i = 0; i < static_cast<int>(std::size(kNames)); ++i) {
    if (kNames[i] == name) return static_cast<EstimatorId>(i);
  }
  return std::nullopt;
}

bool needs_window(EstimatorId id) {
  switch (id) {
    case EstimatorId::h3:
    case EstimatorId::m2:
    case EstimatorId::m2cap:
    case EstimatorId::m3:
    case EstimatorId::m4:
    case EstimatorId::plugin:
      return true;
    default:
      return false;
  }
}

bool targets_entropy(EstimatorId id) {
  switch (id) {
    case EstimatorId::h1:
    case EstimatorId::h2:
    case EstimatorId::h3:
    case EstimatorId::plugin:
      return true;
    default:
      return false;
  }
}

FirstOccurrenceTimes first_occurrence_times(SampleSource& source, std::size_t class_count) {
  if (class_count == 0) {
    throw PreconditionViolated("class count must be positive");
  }
  FirstOccurrenceTimes result;
  result.times.assign(class_count, 0);
  std::size_t seen = 0;
  std::uint64_t index = 0;
  while (seen < class_count) {
    int label = source.next();
    ++index;
    if (label < 1 || static_cast<std::size_t>(label) > class_count) {
      throw PreconditionViolated("sample label " + std::to_string(label) +
                                 " outside the declared class set 1.." + std::to_string(class_count));
    }
    if (result.times[label - 1] == 0) {
      result.times[label - 1] = index;
      ++seen;
    }
  }
  return result;
}

ReturnTimes collect_return_times(SampleSource& source, std::uint64_t window) {
  if (window == 0) {
    throw PreconditionViolated("window size n must be >= 1");
  }
  BufferedSource buffered(source);
  ReturnTimes result;
  result.window = window;
  result.times.reserve(window);
  for (std::uint64_t j = 1; j <= window; ++j) {
    int reference = buffered.at(j);
    std::uint64_t k = 1;
    while (buffered.at(j + k) != reference) ++k;
    result.times.push_back(k);
  }
  return result;
}

EstimateRecord h1_estimate(SampleSource& source, std::size_t class_count) {
  std::uint64_t before = source.draws_consumed();
  FirstOccurrenceTimes first = first_occurrence_times(source, class_count);
  double sum = 0.0;
  for (std::uint64_t n_i : first.times) {
    if (n_i >= 2) sum += 1.0 / static_cast<double>(n_i - 1);
  }
  return {EstimatorId::h1, sum, source.draws_consumed() - before};
}

EstimateRecord h2_estimate(SampleSource& source) {
  std::uint64_t before = source.draws_consumed();
  std::uint64_t n = return_time(source);
  return {EstimatorId::h2, harmonic(n - 1), source.draws_consumed() - before};
}

EstimateRecord h3_estimate(SampleSource& source, std::uint64_t window) {
  std::uint64_t before = source.draws_consumed();
  ReturnTimes times = collect_return_times(source, window);
  double sum = 0.0;
  for (std::uint64_t n_j : times.times) sum += harmonic(n_j - 1);
  return {EstimatorId::h3, sum / static_cast<double>(window), source.draws_consumed() - before};
}

EstimateRecord m1_estimate(SampleSource& source) {
  std::uint64_t before = source.draws_consumed();
  std::uint64_t n = return_time(source);
  return {EstimatorId::m1, static_cast<double>(n), source.draws_consumed() - before};
}

EstimateRecord m2_direct(SampleSource& source, std::uint64_t window) {
  std::uint64_t before = source.draws_consumed();
  ReturnTimes times = collect_return_times(source, window);
  double sum = 0.0;
  for (std::uint64_t n_j : times.times) sum += static_cast<double>(n_j);
  return {EstimatorId::m2, sum / static_cast<double>(window), source.draws_consumed() - before};
}

CaptureRecord capture_recapture(SampleSource& source, std::uint64_t first_size) {
  if (first_size == 0) {
    throw PreconditionViolated("first sample size n must be >= 1");
  }
  // keyed by label; std::map keeps the observed set sorted
  struct PerClass {
    std::uint64_t first_occurrence = 0;
    std::uint64_t recollect_offset = 0;
    std::uint64_t first_count = 0;
    std::uint64_t recollect_count = 0;
  };
  std::map<int, PerClass> classes;

  for (std::uint64_t k = 1; k <= first_size; ++k) {
    int label = source.next();
    PerClass& entry = classes[label];
    if (entry.first_count == 0) entry.first_occurrence = k;
    ++entry.first_count;
  }

  std::size_t pending = classes.size();
  std::uint64_t offset = 0;
  while (pending > 0) {
    ++offset;
    int label = source.next();
    auto it = classes.find(label);
    if (it == classes.end()) continue;  // outside A: only advances m
    PerClass& entry = it->second;
    if (entry.recollect_count == 0) {
      entry.recollect_offset = offset;
      --pending;
    }
    ++entry.recollect_count;
  }

  CaptureRecord record;
  record.first_size = first_size;
  record.subsequent_size = offset;
  record.observed.reserve(classes.size());
  for (const auto& [label, entry] : classes) {
    record.observed.push_back(label);
    record.first_occurrence.push_back(entry.first_occurrence);
    record.recollect_offset.push_back(entry.recollect_offset);
    record.first_count.push_back(entry.first_count);
    record.recollect_count.push_back(entry.recollect_count);
  }
  return record;
}

double m2_telescoped(const CaptureRecord& record) {
  double sum = 0.0;
  for (std::size_t i = 0; i < record.observed.size(); ++i) {
    sum += static_cast<double>(record.recollect_offset[i]) -
           static_cast<double>(record.first_occurrence[i]);
  }
  return static_cast<double>(record.observed.size()) +
         sum / static_cast<double>(record.first_size);
}

std::size_t m3_estimate(std::span<const int> samples) {
  std::unordered_set<int> distinct(samples.begin(), samples.end());
  return distinct.size();
}

double m4_estimate(const CaptureRecord& record) {
  double n = static_cast<double>(record.first_size);
  double m = static_cast<double>(record.subsequent_size);
  double sum = 0.0;
  for (std::size_t i = 0; i < record.observed.size(); ++i) {
    if (record.recollect_count[i] == 0) {
      throw PreconditionViolated("class " + std::to_string(record.observed[i]) +
                                 " missing from the subsequent sample");
    }
    sum += (m + 1.0) / static_cast<double>(record.recollect_count[i] + 1) -
           (n + 1.0) / static_cast<double>(record.first_count[i] + 1);
  }
  return static_cast<double>(record.observed.size()) + sum / n;
}

double m4_from_counts(std::uint64_t n, const std::map<int, std::uint64_t>& first_counts,
                      std::uint64_t m, const std::map<int, std::uint64_t>& subsequent_counts) {
  if (n == 0 || m == 0) {
    throw PreconditionViolated("both sample sizes must be >= 1");
  }
  CaptureRecord record;
  record.first_size = n;
  record.subsequent_size = m;
  std::uint64_t first_total = 0;
  std::uint64_t subsequent_total = 0;
  for (const auto& [label, count] : first_counts) {
    if (count == 0) continue;
    auto it = subsequent_counts.find(label);
    std::uint64_t recollected = it == subsequent_counts.end() ? 0 : it->second;
    if (recollected == 0) {
      throw PreconditionViolated("class " + std::to_string(label) +
                                 " observed in the first sample but not the subsequent one");
    }
    record.observed.push_back(label);
    record.first_count.push_back(count);
    record.recollect_count.push_back(recollected);
    first_total += count;
  }
  if (record.observed.empty()) {
    throw PreconditionViolated("first sample counts are all zero");
  }
  if (first_total != n) {
    throw PreconditionViolated("first sample counts sum to " + std::to_string(first_total) +
                               ", expected n = " + std::to_string(n));
  }
  for (const auto& [label, count] : subsequent_counts) subsequent_total += count;
  if (subsequent_total > m) {
    throw PreconditionViolated("subsequent sample counts sum to " +
                               std::to_string(subsequent_total) +
                               ", above m = " + std::to_string(m));
  }
  record.first_occurrence.assign(record.observed.size(), 0);
  record.recollect_offset.assign(record.observed.size(), 0);
  return m4_estimate(record);
}

double plugin_entropy(const PluginCounts& counts) {
  if (counts.n == 0) {
    throw PreconditionViolated("plug-in estimator needs n >= 1");
  }
  std::uint64_t total = 0;
  for (std::uint64_t k : counts.counts) total += k;
  if (total != counts.n) {
    throw PreconditionViolated("counts sum to " + std::to_string(total) + ", expected n = " +
                               std::to_string(counts.n));
  }
  double n = static_cast<double>(counts.n);
  double h = 0.0;
  for (std::uint64_t k : counts.counts) {
    if (k == 0) continue;
    double p = static_cast<double>(k) / n;
    h -= p * std::log(p);
  }
  return h;
}

PluginCounts tally_counts(SampleSource& source, std::uint64_t n, std::size_t class_count) {
  if (n == 0) {
    throw PreconditionViolated("sample size n must be >= 1");
  }
  PluginCounts counts;
  counts.n = n;
  counts.counts.assign(class_count, 0);
  for (std::uint64_t k = 0; k < n; ++k) {
    int label = source.next();
    if (label < 1 || static_cast<std::size_t>(label) > class_count) {
      throw PreconditionViolated("sample label outside the declared class set");
    }
    ++counts.counts[label - 1];
  }
  return counts;
}

}  // namespace seqent
