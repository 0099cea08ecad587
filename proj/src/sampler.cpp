#include "seqent/sampler.hpp"

#include <algorithm>
#include <string>

namespace seqent {

CapExceeded::CapExceeded(std::uint64_t cap)
    : std::runtime_error("draw cap of " + std::to_string(cap) + " exhausted"), max_draws(cap) {}

std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t replication_index) {
  // splitmix64 finalizer (Steele/Lea/Vigna) applied to the master seed
  // advanced by index+1 increments of the golden-ratio gamma.
  std::uint64_t z = master_seed + (replication_index + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

SampleStream::SampleStream(const CategoricalDistribution& dist, std::uint64_t seed,
                           std::uint64_t max_draws)
    : dist_(dist), rng_(seed), max_draws_(max_draws) {
  if (max_draws_ == 0) {
    throw std::invalid_argument("max_draws must be positive");
  }
  cumulative_.reserve(dist_.size());
  double running = 0.0;
  for (double p : dist_.probs()) {
    running += p;
    cumulative_.push_back(running);
  }
  cumulative_.back() = 1.0;
}

int SampleStream::next() {
  if (draws_ >= max_draws_) {
    throw CapExceeded(max_draws_);
  }
  ++draws_;
  // 53-bit mantissa mapping: u is uniform on [0, 1), strictly below 1, so
  // the search always lands inside the table. Zero-probability classes get
  // zero-width intervals and are never selected.
  double u = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
  auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
  return static_cast<int>(it - cumulative_.begin()) + 1;
}

}  // namespace seqent
