#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "seqent/dist.hpp"

namespace seqent {

inline constexpr std::uint64_t kDefaultMaxDraws = 10'000'000;

// Identifier of the sampling pipeline, recorded in reports so results are
// replayable: std::mt19937_64 (standard-specified, hence identical on every
// platform) -> 53-bit uniform in [0,1) -> inverse-CDF binary search.
inline constexpr char kGeneratorId[] = "mt19937_64/invcdf53";

// Thrown when an evaluation would exceed the stream's draw cap. The run
// that hit the cap is reported as a failure, never truncated to a value.
struct CapExceeded : std::runtime_error {
  explicit CapExceeded(std::uint64_t cap);
  std::uint64_t max_draws;
};

// Thrown when an estimator's structural precondition does not hold
// (e.g. a declared class with zero probability for h1, or s_i = 0 in
// externally supplied capture counts).
struct PreconditionViolated : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// splitmix64 mixing of (master_seed, replication_index); the gamma is odd,
// so the map is injective in the index for a fixed master seed.
std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t replication_index);

// Minimal interface the estimators consume: a counted source of class
// labels. Lets tests drive estimators with scripted sequences.
class SampleSource {
 public:
  virtual ~SampleSource() = default;

  // Next class label (1-based). Throws CapExceeded once the cap is hit.
  virtual int next() = 0;
  virtual std::uint64_t draws_consumed() const = 0;
};

// Unbounded i.i.d. stream of class labels from a categorical distribution.
// Identical (distribution, seed) yields the identical sequence on every
// run and platform. Single-owner; not shared across threads.
class SampleStream final : public SampleSource {
 public:
  SampleStream(const CategoricalDistribution& dist, std::uint64_t seed,
               std::uint64_t max_draws = kDefaultMaxDraws);

  int next() override;
  std::uint64_t draws_consumed() const override { return draws_; }
  std::uint64_t max_draws() const { return max_draws_; }
  const CategoricalDistribution& distribution() const { return dist_; }

 private:
  CategoricalDistribution dist_;
  std::vector<double> cumulative_;
  std::mt19937_64 rng_;
  std::uint64_t max_draws_;
  std::uint64_t draws_ = 0;
};

}  // namespace seqent
