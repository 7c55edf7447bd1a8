#include <cmath>

#include "doctest.h"
#include "metrotrade/errors.hpp"
#include "metrotrade/numeric.hpp"
#include "metrotrade/rng.hpp"
#include "metrotrade/sampling.hpp"

using namespace metrotrade;

TEST_CASE("OutcomeStats projection noise") {
  const auto s = binary_stats(0.5, 100);
  CHECK(s.std_devs()[0] == doctest::Approx(0.05).epsilon(1e-15));
  CHECK(s.std_devs()[1] == doctest::Approx(0.05).epsilon(1e-15));
  CHECK(binary_stats(1.0, 10).std_devs()[0] == 0.0);
  CHECK(OutcomeStats::projection_noise(0.2, 4) == doctest::Approx(0.2));
}

TEST_CASE("OutcomeStats validation") {
  CHECK_THROWS_AS(OutcomeStats({1.0}, 10), DomainError);
  CHECK_THROWS_AS(OutcomeStats({0.6, 0.6}, 10), DomainError);
  CHECK_THROWS_AS(OutcomeStats({1.2, -0.2}, 10), DomainError);
  CHECK_THROWS_AS(OutcomeStats({0.5, 0.5}, 0), DomainError);
  CHECK_NOTHROW(OutcomeStats({0.2, 0.3, 0.5}, 10));
}

TEST_CASE("POVM statistics of initial and final probes") {
  const auto initial = ProbePhaseState::single(0.0);
  const auto final = ProbePhaseState::single(kPi / 2);
  const auto [s0, s1] = povm_stats(initial, final, 10);
  CHECK(s0.probabilities()[0] == 1.0);
  CHECK(s0.probabilities()[1] == 0.0);
  CHECK(s1.probabilities()[0] == doctest::Approx(0.5));
  CHECK_THROWS_AS(povm_stats(initial, ProbePhaseState::ghz(0.1, 2), 10), DomainError);
}

TEST_CASE("binomial enumeration sums to one with the right moments") {
  const auto pmf = enumerate_binomial(0.3, 64);
  REQUIRE(pmf.size() == 65);
  CompensatedSum total;
  CompensatedSum mean;
  for (const auto& e : pmf) {
    total += e.probability;
    mean += e.probability * static_cast<double>(e.k);
  }
  CHECK(total.value() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(mean.value() == doctest::Approx(19.2).epsilon(1e-13));
  CHECK_THROWS_AS(enumerate_binomial(0.3, 65), BudgetError);
}

TEST_CASE("binomial sampler matches mean and variance in both regimes") {
  for (auto [n, p] : {std::pair<std::uint64_t, double>{20, 0.3}, {5000, 0.42}, {1000, 0.93}}) {
    CounterRng rng(11, n);
    const int draws = 40000;
    double sum = 0.0;
    double sq = 0.0;
    for (int i = 0; i < draws; ++i) {
      const auto k = static_cast<double>(sample_binomial(n, p, rng));
      REQUIRE(k <= static_cast<double>(n));
      sum += k;
      sq += k * k;
    }
    const double mean = sum / draws;
    const double var = sq / draws - mean * mean;
    const double expected_var = n * p * (1 - p);
    CHECK(std::abs(mean - n * p) < 5.0 * std::sqrt(expected_var / draws));
    CHECK(var == doctest::Approx(expected_var).epsilon(0.05));
  }
  CounterRng rng(1, 0);
  CHECK(sample_binomial(10, 0.0, rng) == 0);
  CHECK(sample_binomial(10, 1.0, rng) == 10);
}

TEST_CASE("multinomial counts sum to n") {
  CounterRng rng(5, 0);
  const auto counts = sample_multinomial(1000, {0.2, 0.5, 0.3}, rng);
  REQUIRE(counts.size() == 3);
  CHECK(counts[0] + counts[1] + counts[2] == 1000);
}

TEST_CASE("draws are keyed by seed and trial") {
  const auto stats = binary_stats(0.4, 50);
  const auto a = draw_sample(stats, 9, 17);
  const auto b = draw_sample(stats, 9, 17);
  CHECK(a.counts == b.counts);
  const auto batch = draw_samples(stats, 9, 20);
  REQUIRE(batch.size() == 20);
  CHECK(batch[17].counts == a.counts);
}
