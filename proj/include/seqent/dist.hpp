#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace seqent {

// Categorical population model: probability vector p_1..p_M indexed by
// class label 1..M. Entries may be zero; the class number counts only
// strictly positive entries. After validation the vector is renormalized
// (divided by its sum) so downstream series see a sum of exactly 1.
class CategoricalDistribution {
 public:
  // Throws std::invalid_argument if any entry is outside [0,1], the sum
  // deviates from 1 by more than 1e-12, or no entry is positive.
  explicit CategoricalDistribution(std::vector<double> probs);

  const std::vector<double>& probs() const { return probs_; }

  // Declared class count M_total (including zero-probability entries).
  std::size_t size() const { return probs_.size(); }

  // True iff every declared class has strictly positive probability.
  bool fully_supported() const { return support_ == probs_.size(); }

  static constexpr double kSumTolerance = 1e-12;

 private:
  std::vector<double> probs_;
  std::size_t support_;
};

// Shannon entropy in nats, -sum p_i ln p_i with 0 ln 0 := 0.
double entropy(const CategoricalDistribution& dist);

// Number of classes with strictly positive probability.
std::size_t class_number(const CategoricalDistribution& dist);

CategoricalDistribution make_uniform(std::size_t num_classes);

// p_i proportional to i^(-s), normalized. s = 0 reduces to uniform.
CategoricalDistribution make_zipf(std::size_t num_classes, double exponent);

// Parses the CLI grammar: "uniform:M", "zipf:M:s", "probs:p1,p2,...,pM".
// Throws std::invalid_argument on malformed specs.
CategoricalDistribution parse_distribution(std::string_view spec);

}  // namespace seqent
