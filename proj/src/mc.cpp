#include "seqent/mc.hpp"

#include <cmath>
#include <cstdio>
#include <exception>
#include <limits>
#include <stdexcept>
#include <thread>
#include <vector>

namespace seqent {

namespace {

// Deterministic pairwise reduction: the result depends only on the array
// contents and order, never on the worker count.
double pairwise_sum(const double* values, std::size_t count) {
  if (count <= 8) {
    double sum = 0.0;
    for (std::size_t i = 0; i < count; ++i) sum += values[i];
    return sum;
  }
  std::size_t half = count / 2;
  return pairwise_sum(values, half) + pairwise_sum(values + half, count - half);
}

double pairwise_squared_deviation(const double* values, std::size_t count, double mean) {
  if (count <= 8) {
    double sum = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
      double d = values[i] - mean;
      sum += d * d;
    }
    return sum;
  }
  std::size_t half = count / 2;
  return pairwise_squared_deviation(values, half, mean) +
         pairwise_squared_deviation(values + half, count - half, mean);
}

void validate(const ExperimentConfig& config) {
  if (config.replications < 2) {
    throw std::invalid_argument("need at least 2 replications");
  }
  if (!(config.z_threshold > 0.0)) {
    throw std::invalid_argument("z threshold must be positive");
  }
  if (needs_window(config.estimator) && config.window == 0) {
    throw std::invalid_argument(std::string("estimator ") +
                                std::string(to_string(config.estimator)) + " needs --n >= 1");
  }
}

}  // namespace

bool MonteCarloReport::certified_unbiased() const {
  return failures == 0 && completed >= 2 && std::isfinite(z) &&
         std::abs(z) <= config.z_threshold;
}

double truth_value(const CategoricalDistribution& dist, EstimatorId estimator) {
  return targets_entropy(estimator) ? entropy(dist)
                                    : static_cast<double>(class_number(dist));
}

EstimateRecord evaluate_once(const CategoricalDistribution& dist, EstimatorId estimator,
                             std::uint64_t window, std::uint64_t seed, std::uint64_t max_draws) {
  SampleStream stream(dist, seed, max_draws);
  switch (estimator) {
    case EstimatorId::h1:
      if (!dist.fully_supported()) {
        throw PreconditionViolated(
            "h1 needs every declared class reachable; a zero-probability class never appears");
      }
      return h1_estimate(stream, dist.size());
    case EstimatorId::h2:
      return h2_estimate(stream);
    case EstimatorId::h3:
      return h3_estimate(stream, window);
    case EstimatorId::m1:
      return m1_estimate(stream);
    case EstimatorId::m2:
      return m2_direct(stream, window);
    case EstimatorId::m2cap: {
      CaptureRecord record = capture_recapture(stream, window);
      return {EstimatorId::m2cap, m2_telescoped(record), stream.draws_consumed()};
    }
    case EstimatorId::m3: {
      std::vector<int> samples(window);
      for (auto& label : samples) label = stream.next();
      return {EstimatorId::m3, static_cast<double>(m3_estimate(samples)),
              stream.draws_consumed()};
    }
    case EstimatorId::m4: {
      CaptureRecord record = capture_recapture(stream, window);
      return {EstimatorId::m4, m4_estimate(record), stream.draws_consumed()};
    }
    case EstimatorId::plugin: {
      PluginCounts counts = tally_counts(stream, window, dist.size());
      return {EstimatorId::plugin, plugin_entropy(counts), stream.draws_consumed()};
    }
  }
  throw std::logic_error("unreachable estimator id");
}

MonteCarloReport run_replications(const ExperimentConfig& config, unsigned workers) {
  validate(config);
  CategoricalDistribution dist = parse_distribution(config.dist_spec);
  if (config.estimator == EstimatorId::h1 && !dist.fully_supported()) {
    throw PreconditionViolated(
        "h1 needs every declared class reachable; a zero-probability class never appears");
  }

  std::uint64_t reps = config.replications;
  std::vector<double> values(reps, 0.0);
  std::vector<double> draws(reps, 0.0);
  std::vector<char> failed(reps, 0);

  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, reps));

  auto run_range = [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t index = begin; index < end; ++index) {
      try {
        EstimateRecord record =
            evaluate_once(dist, config.estimator, config.window,
                          derive_seed(config.master_seed, index), config.max_draws);
        values[index] = record.value;
        draws[index] = static_cast<double>(record.draws_consumed);
      } catch (const CapExceeded&) {
        failed[index] = 1;
      }
    }
  };

  if (workers <= 1) {
    run_range(0, reps);
  } else {
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    std::uint64_t chunk = (reps + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      std::uint64_t begin = w * chunk;
      std::uint64_t end = std::min(reps, begin + chunk);
      pool.emplace_back([&, w, begin, end] {
        try {
          run_range(begin, end);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& thread : pool) thread.join();
    for (auto& error : errors) {
      if (error) std::rethrow_exception(error);
    }
  }

  // compact in replication-index order, then reduce serially
  std::vector<double> completed_values;
  std::vector<double> completed_draws;
  completed_values.reserve(reps);
  completed_draws.reserve(reps);
  for (std::uint64_t index = 0; index < reps; ++index) {
    if (!failed[index]) {
      completed_values.push_back(values[index]);
      completed_draws.push_back(draws[index]);
    }
  }

  MonteCarloReport report;
  report.config = config;
  report.completed = completed_values.size();
  report.failures = reps - report.completed;
  report.truth = truth_value(dist, config.estimator);

  std::size_t count = completed_values.size();
  if (count == 0) {
    double nan = std::numeric_limits<double>::quiet_NaN();
    report.mean = report.stddev = report.std_error = report.bias = report.z = nan;
    report.mean_draws = nan;
    return report;
  }
  report.mean = pairwise_sum(completed_values.data(), count) / static_cast<double>(count);
  report.mean_draws = pairwise_sum(completed_draws.data(), count) / static_cast<double>(count);
  if (count >= 2) {
    double ss = pairwise_squared_deviation(completed_values.data(), count, report.mean);
    report.stddev = std::sqrt(ss / static_cast<double>(count - 1));
  }
  report.std_error = report.stddev / std::sqrt(static_cast<double>(count));
  report.bias = report.mean - report.truth;
  if (report.std_error > 0.0) {
    report.z = report.bias / report.std_error;
  } else if (report.bias == 0.0) {
    report.z = 0.0;
  } else {
    report.z = report.bias > 0.0 ? std::numeric_limits<double>::infinity()
                                 : -std::numeric_limits<double>::infinity();
  }
  return report;
}

MonteCarloReport plugin_bias_experiment(const CategoricalDistribution& dist, std::uint64_t n,
                                        std::uint64_t replications, std::uint64_t master_seed,
                                        unsigned workers) {
  ExperimentConfig config;
  config.dist_spec = "probs:";
  for (std::size_t i = 0; i < dist.probs().size(); ++i) {
    if (i > 0) config.dist_spec += ',';
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.17g", dist.probs()[i]);
    config.dist_spec += buffer;
  }
  config.estimator = EstimatorId::plugin;
  config.window = n;
  config.replications = replications;
  config.master_seed = master_seed;
  return run_replications(config, workers);
}

std::vector<MonteCarloReport> compare(const std::vector<ExperimentConfig>& configs,
                                      unsigned workers) {
  if (configs.empty()) {
    throw std::invalid_argument("compare needs at least one experiment");
  }
  std::vector<MonteCarloReport> reports;
  reports.reserve(configs.size());
  for (const auto& config : configs) {
    reports.push_back(run_replications(config, workers));
  }
  return reports;
}

}  // namespace seqent
