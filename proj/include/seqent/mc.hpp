#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "seqent/dist.hpp"
#include "seqent/estimators.hpp"

namespace seqent {

// One Monte Carlo experiment: `replications` independent evaluations of one
// estimator against one distribution, each on a fresh stream seeded by
// derive_seed(master_seed, index).
struct ExperimentConfig {
  std::string dist_spec;  // grammar of parse_distribution, echoed in reports
  EstimatorId estimator = EstimatorId::h2;
  std::uint64_t window = 0;  // n, for the estimators that take one
  std::uint64_t replications = 0;
  std::uint64_t master_seed = 0;
  std::uint64_t max_draws = kDefaultMaxDraws;
  double z_threshold = 4.0;
};

struct MonteCarloReport {
  ExperimentConfig config;
  std::uint64_t completed = 0;
  std::uint64_t failures = 0;  // cap hits; excluded from the moments
  double mean = 0.0;
  double stddev = 0.0;   // sample standard deviation
  double std_error = 0.0;  // stddev / sqrt(completed)
  double truth = 0.0;    // entropy or class number from the distribution
  double bias = 0.0;     // mean - truth
  double z = 0.0;        // bias / std_error, see conventions below
  double mean_draws = 0.0;
  std::string generator = kGeneratorId;

  // z conventions when stddev = 0: z = 0 if bias = 0, +-infinity otherwise.
  // A nonzero failure count voids the unbiasedness certification.
  bool certified_unbiased() const;
};

// Single estimator evaluation, the unit the replication loop repeats and
// what the CLI `estimate` subcommand exposes for tracing.
EstimateRecord evaluate_once(const CategoricalDistribution& dist, EstimatorId estimator,
                             std::uint64_t window, std::uint64_t seed, std::uint64_t max_draws);

// True target of an estimator under `dist`: entropy or class number.
double truth_value(const CategoricalDistribution& dist, EstimatorId estimator);

// Runs the replications on `workers` threads (0 = hardware concurrency).
// Results are aggregated in replication-index order with a pairwise
// summation, so the report is byte-identical for any worker count.
MonteCarloReport run_replications(const ExperimentConfig& config, unsigned workers = 0);

// Fixed-n plug-in experiment; the report's truth is entropy(dist).
MonteCarloReport plugin_bias_experiment(const CategoricalDistribution& dist, std::uint64_t n,
                                        std::uint64_t replications, std::uint64_t master_seed,
                                        unsigned workers = 0);

// One report row per config, in input order.
std::vector<MonteCarloReport> compare(const std::vector<ExperimentConfig>& configs,
                                      unsigned workers = 0);

}  // namespace seqent
