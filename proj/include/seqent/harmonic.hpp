#pragma once

#include <cstddef>
#include <vector>

namespace seqent {

// Table of harmonic numbers h_k = sum_{j=1..k} 1/j, h_0 = 0, filled by
// forward summation and grown on demand. No asymptotic approximation is
// used anywhere: the unbiasedness identities need the exact partial sums.
class HarmonicTable {
 public:
  double value(std::size_t k);
  std::size_t size() const { return values_.size(); }

 private:
  std::vector<double> values_{0.0};
};

// h_k via a thread-local table, so concurrent replication workers never
// contend on shared state.
double harmonic(std::size_t k);

}  // namespace seqent
