#include "seqent/dist.hpp"

#include <algorithm>
#include <cmath>
#include <charconv>
#include <stdexcept>

namespace seqent {

namespace {

double parse_double(std::string_view text, const char* what) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw std::invalid_argument(std::string("malformed ") + what + ": '" + std::string(text) + "'");
  }
  return value;
}

std::uint64_t parse_count(std::string_view text, const char* what) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw std::invalid_argument(std::string("malformed ") + what + ": '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

CategoricalDistribution::CategoricalDistribution(std::vector<double> probs)
    : probs_(std::move(probs)), support_(0) {
  if (probs_.empty()) {
    throw std::invalid_argument("distribution needs at least one class");
  }
  double sum = 0.0;
  for (double p : probs_) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw std::invalid_argument("probability outside [0, 1]");
    }
    sum += p;
    if (p > 0.0) ++support_;
  }
  if (support_ == 0) {
    throw std::invalid_argument("all probabilities are zero");
  }
  if (std::abs(sum - 1.0) > kSumTolerance) {
    throw std::invalid_argument("probabilities sum to " + std::to_string(sum) + ", not 1");
  }
  for (double& p : probs_) p /= sum;
}

double entropy(const CategoricalDistribution& dist) {
  double h = 0.0;
  for (double p : dist.probs()) {
    if (p > 0.0) h -= p * std::log(p);
  }
  return h;
}

std::size_t class_number(const CategoricalDistribution& dist) {
  std::size_t count = 0;
  for (double p : dist.probs()) {
    if (p > 0.0) ++count;
  }
  return count;
}

CategoricalDistribution make_uniform(std::size_t num_classes) {
  if (num_classes == 0) {
    throw std::invalid_argument("uniform distribution needs M >= 1");
  }
  return CategoricalDistribution(
      std::vector<double>(num_classes, 1.0 / static_cast<double>(num_classes)));
}

CategoricalDistribution make_zipf(std::size_t num_classes, double exponent) {
  if (num_classes == 0) {
    throw std::invalid_argument("zipf distribution needs M >= 1");
  }
  if (!(exponent >= 0.0)) {
    throw std::invalid_argument("zipf exponent must be >= 0");
  }
  std::vector<double> weights(num_classes);
  double sum = 0.0;
  for (std::size_t i = 0; i < num_classes; ++i) {
    weights[i] = std::pow(static_cast<double>(i + 1), -exponent);
    sum += weights[i];
  }
  for (double& w : weights) w /= sum;
  return CategoricalDistribution(std::move(weights));
}

CategoricalDistribution parse_distribution(std::string_view spec) {
  auto colon = spec.find(':');
  if (colon == std::string_view::npos) {
    throw std::invalid_argument("distribution spec '" + std::string(spec) +
                                "' (expected uniform:M, zipf:M:s or probs:p1,...,pM)");
  }
  std::string_view kind = spec.substr(0, colon);
  std::string_view rest = spec.substr(colon + 1);
  if (kind == "uniform") {
    return make_uniform(parse_count(rest, "class count"));
  }
  if (kind == "zipf") {
    auto sep = rest.find(':');
    if (sep == std::string_view::npos) {
      throw std::invalid_argument("zipf spec needs both M and s (zipf:M:s)");
    }
    std::uint64_t m = parse_count(rest.substr(0, sep), "class count");
    double s = parse_double(rest.substr(sep + 1), "zipf exponent");
    return make_zipf(m, s);
  }
  if (kind == "probs") {
    std::vector<double> probs;
    while (!rest.empty()) {
      auto sep = rest.find(',');
      std::string_view item = rest.substr(0, sep);
      probs.push_back(parse_double(item, "probability"));
      if (sep == std::string_view::npos) break;
      rest.remove_prefix(sep + 1);
    }
    if (probs.empty()) {
      throw std::invalid_argument("probs spec lists no probabilities");
    }
    return CategoricalDistribution(std::move(probs));
  }
  throw std::invalid_argument("unknown distribution kind '" + std::string(kind) + "'");
}

}  // namespace seqent
