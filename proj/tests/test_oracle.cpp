#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "seqent/dist.hpp"
#include "seqent/estimators.hpp"
#include "seqent/oracle.hpp"

using namespace seqent;

TEST_CASE("series identities vanish at x = 0 and converge fast at |x| = 0.5") {
  CHECK(series_identity_check(0.0, 5) == 0.0);
  CHECK(series_identity_check(0.5, 200) < 1e-10);
  CHECK(series_identity_check(-0.5, 200) < 1e-10);
  CHECK_THROWS_AS(series_identity_check(1.0, 10), std::invalid_argument);
  CHECK_THROWS_AS(series_identity_check(-1.5, 10), std::invalid_argument);
}

TEST_CASE("series discrepancy is monotone nonincreasing in K for x >= 0") {
  for (double x : {0.1, 0.4, 0.8}) {
    double previous = series_identity_check(x, 4);
    for (std::uint64_t terms : {8, 16, 32, 64, 128, 256}) {
      double current = series_identity_check(x, terms);
      REQUIRE(current <= previous + 1e-18);
      previous = current;
    }
  }
}

TEST_CASE("expected_h2 certifies the entropy") {
  SUBCASE("degenerate") {
    auto result = expected_h2(CategoricalDistribution({1.0}), 1e-9);
    CHECK(result.value == 0.0);
    CHECK(result.tail_bound <= 1e-9);
  }
  SUBCASE("fair coin") {
    auto result = expected_h2(CategoricalDistribution({0.5, 0.5}), 1e-9);
    CHECK(result.tail_bound <= 1e-9);
    CHECK(std::abs(result.value - std::log(2.0)) <= 1e-9);
  }
  SUBCASE("skewed three classes") {
    CategoricalDistribution dist({0.5, 0.3, 0.2});
    auto result = expected_h2(dist, 1e-9);
    CHECK(result.tail_bound <= 1e-9);
    CHECK(std::abs(result.value - entropy(dist)) <= 1e-9);
    CHECK(std::abs(result.value - 1.0296530140645737) <= 1e-9);
  }
}

TEST_CASE("expected_h1 certifies the entropy") {
  CHECK(expected_h1(CategoricalDistribution({1.0}), 1e-9).value == 0.0);
  auto coin = expected_h1(CategoricalDistribution({0.5, 0.5}), 1e-9);
  CHECK(std::abs(coin.value - std::log(2.0)) <= 1e-9);
  auto skewed = expected_h1(CategoricalDistribution({0.9, 0.1}), 1e-9);
  CHECK(skewed.tail_bound <= 1e-9);
  CHECK(std::abs(skewed.value - 0.3250829733914482) <= 1e-9);
}

TEST_CASE("expected_m1 certifies the class number") {
  CHECK(expected_m1(CategoricalDistribution({1.0}), 1e-9).value == 1.0);
  auto coin = expected_m1(CategoricalDistribution({0.5, 0.5}), 1e-9);
  CHECK(std::abs(coin.value - 2.0) <= 1e-9);
  auto skewed = expected_m1(CategoricalDistribution({0.5, 0.3, 0.2}), 1e-9);
  CHECK(skewed.tail_bound <= 1e-9);
  CHECK(std::abs(skewed.value - 3.0) <= 1e-9);
}

TEST_CASE("expectations agree with the truth within their own tail bound") {
  std::vector<CategoricalDistribution> dists{
      make_uniform(4), make_zipf(5, 1.0), CategoricalDistribution({0.5, 0.3, 0.2}),
      CategoricalDistribution({0.97, 0.01, 0.01, 0.01})};
  for (const auto& dist : dists) {
    for (double tol : {1e-6, 1e-10}) {
      auto h1 = expected_h1(dist, tol);
      REQUIRE(std::abs(h1.value - entropy(dist)) <= h1.tail_bound + 1e-13);
      auto h2 = expected_h2(dist, tol);
      REQUIRE(std::abs(h2.value - entropy(dist)) <= h2.tail_bound + 1e-13);
      auto m1 = expected_m1(dist, tol);
      REQUIRE(std::abs(m1.value - static_cast<double>(class_number(dist))) <=
              m1.tail_bound + 1e-13);
    }
  }
}

TEST_CASE("zero-probability classes are skipped by the expectation series") {
  CategoricalDistribution dist({0.5, 0.5, 0.0});
  auto h2 = expected_h2(dist, 1e-9);
  CHECK(std::abs(h2.value - std::log(2.0)) <= 1e-9);
  auto m1 = expected_m1(dist, 1e-9);
  CHECK(std::abs(m1.value - 2.0) <= 1e-9);
}

TEST_CASE("tail bound is a true bound: tightening tol moves the value less than it") {
  CategoricalDistribution dist({0.5, 0.3, 0.2});
  auto loose = expected_h2(dist, 1e-4);
  auto tight = expected_h2(dist, 1e-12);
  CHECK(std::abs(loose.value - tight.value) <= loose.tail_bound);
  CHECK(tight.terms_used > loose.terms_used);

  auto loose_m = expected_m1(dist, 1e-4);
  auto tight_m = expected_m1(dist, 1e-12);
  CHECK(std::abs(loose_m.value - tight_m.value) <= loose_m.tail_bound);
}

TEST_CASE("m4 permutation oracle matches the closed formula on the spec instances") {
  std::map<int, std::uint64_t> r1{{1, 2}, {2, 1}}, s1{{1, 1}, {2, 1}};
  CHECK(m4_permutation_oracle_exact(3, r1, 2, s1) == Rational(17, 9));
  CHECK(m4_permutation_oracle(3, r1, 2, s1) == doctest::Approx(17.0 / 9.0).epsilon(1e-15));
  CHECK(std::abs(m4_permutation_oracle(3, r1, 2, s1) - m4_from_counts(3, r1, 2, s1)) <= 1e-12);

  std::map<int, std::uint64_t> r2{{1, 2}}, s2{{1, 1}};
  CHECK(m4_permutation_oracle_exact(2, r2, 1, s2) == Rational(1));

  std::map<int, std::uint64_t> r3{{1, 1}, {2, 1}}, s3{{1, 1}, {2, 1}};
  CHECK(m4_permutation_oracle_exact(2, r3, 2, s3) == m4_formula_exact(2, r3, 2, s3));
}

TEST_CASE("m4 oracle rejects out-of-budget and inconsistent inputs") {
  std::map<int, std::uint64_t> big_r{{1, 8}}, big_s{{1, 8}};
  CHECK_THROWS_AS(m4_permutation_oracle_exact(8, big_r, 8, big_s), std::invalid_argument);
  std::map<int, std::uint64_t> r{{1, 2}, {2, 1}}, missing_s{{1, 1}};
  CHECK_THROWS_AS(m4_permutation_oracle_exact(3, r, 2, missing_s), PreconditionViolated);
}

TEST_CASE("rearrangement identity over every configuration within the budget") {
  // all valid (r, s) with up to 3 classes, n <= 4, m <= 3, r_i >= 1, s_i >= 1,
  // sum r = n, sum s <= m; fillers outside A pad the subsequent sample
  int cases = 0;
  for (int classes = 1; classes <= 3; ++classes) {
    std::vector<std::vector<std::uint64_t>> first_splits, subsequent_splits;
    std::vector<std::uint64_t> current(classes, 1);
    auto enumerate = [&](auto&& self, std::vector<std::uint64_t>& counts, int position,
                         std::uint64_t budget, auto&& sink) -> void {
      if (position == classes) {
        sink(counts);
        return;
      }
      for (std::uint64_t value = 1; value <= budget - (classes - position - 1); ++value) {
        counts[position] = value;
        self(self, counts, position + 1, budget - value, sink);
      }
    };
    for (std::uint64_t n = classes; n <= 4; ++n) {
      std::vector<std::vector<std::uint64_t>> r_options;
      enumerate(enumerate, current, 0, n,
                [&](const std::vector<std::uint64_t>& counts) {
                  if (std::accumulate(counts.begin(), counts.end(), std::uint64_t{0}) == n)
                    r_options.push_back(counts);
                });
      for (std::uint64_t m = classes; m <= 3; ++m) {
        std::vector<std::vector<std::uint64_t>> s_options;
        for (std::uint64_t total = classes; total <= m; ++total) {
          enumerate(enumerate, current, 0, total,
                    [&](const std::vector<std::uint64_t>& counts) {
                      if (std::accumulate(counts.begin(), counts.end(), std::uint64_t{0}) == total)
                        s_options.push_back(counts);
                    });
        }
        for (const auto& r_counts : r_options) {
          for (const auto& s_counts : s_options) {
            std::map<int, std::uint64_t> r, s;
            for (int i = 0; i < classes; ++i) {
              r[i + 1] = r_counts[i];
              s[i + 1] = s_counts[i];
            }
            Rational enumerated = m4_permutation_oracle_exact(n, r, m, s);
            Rational formula = m4_formula_exact(n, r, m, s);
            REQUIRE(enumerated == formula);
            REQUIRE(std::abs(boost::rational_cast<double>(enumerated) -
                             m4_from_counts(n, r, m, s)) <= 1e-12);
            ++cases;
          }
        }
      }
    }
  }
  // 52 = sum over class counts of #compositions(n) x #subsequent choices
  CHECK(cases == 52);
}
