#pragma once

#include <span>
#include <string>
#include <vector>

#include "seqent/mc.hpp"
#include "seqent/oracle.hpp"

namespace seqent {

// One row of the `verify` subcommand output.
struct VerifyRow {
  std::string check;
  double observed = 0.0;
  double expected = 0.0;
  double error = 0.0;       // |observed - expected|
  double tail_bound = 0.0;  // 0 for checks without a truncation bound
  double tolerance = 0.0;
  bool pass = false;
};

// Serialization contract: JSON objects carry exactly the keys
//   estimator, dist, n, reps, failures, mean, stddev, stderr, truth,
//   bias, z, mean_draws, seed, generator
// in that order; CSV uses the same columns. Floating-point values are
// rendered with 17 significant digits so reports replay bit-exactly.
// Non-finite values appear as "inf" / "-inf" / "nan" (quoted in JSON).
std::string format_double(double value);

std::string to_json(const MonteCarloReport& report);
std::string to_json(std::span<const MonteCarloReport> reports);  // one row per line
std::string to_csv(std::span<const MonteCarloReport> reports);

std::string to_json(const EstimateRecord& record, const std::string& dist_spec,
                    std::uint64_t window, std::uint64_t seed);
std::string to_csv(const EstimateRecord& record, const std::string& dist_spec,
                   std::uint64_t window, std::uint64_t seed);

std::string to_json(std::span<const VerifyRow> rows);
std::string to_csv(std::span<const VerifyRow> rows);

}  // namespace seqent
