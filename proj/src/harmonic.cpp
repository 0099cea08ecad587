#include "seqent/harmonic.hpp"

namespace seqent {

double HarmonicTable::value(std::size_t k) {
  if (k >= values_.size()) {
    values_.reserve(std::max(values_.size() * 2, k + 1));
    for (std::size_t j = values_.size(); j <= k; ++j) {
      values_.push_back(values_[j - 1] + 1.0 / static_cast<double>(j));
    }
  }
  return values_[k];
}

double harmonic(std::size_t k) {
  thread_local HarmonicTable table;
  return table.value(k);
}

}  // namespace seqent
