#include <cmath>

#include "doctest.h"
#include "metrotrade/bounds.hpp"
#include "metrotrade/errors.hpp"
#include "metrotrade/numeric.hpp"
#include "metrotrade/sampling.hpp"
#include "metrotrade/states.hpp"

using namespace metrotrade;

TEST_CASE("critical fidelity and minimum detectable signal") {
  CHECK(critical_fidelity(AccuracySpec(1.0, 100)) == doctest::Approx(100.0 / 101.0));
  const auto r = min_detectable_signal(AccuracySpec(1.0, 100));
  CHECK(r.min_signal_exact == doctest::Approx(0.19933730498232405476).epsilon(1e-14));
  CHECK(r.min_signal_asymptotic == doctest::Approx(0.2));
  CHECK(r.qcrb == doctest::Approx(0.1));
  CHECK(r.correction_ratio == doctest::Approx(1.9933730498232405476).epsilon(1e-14));
  CHECK(min_detectable_signal(AccuracySpec(1.0, 1)).min_signal_exact ==
        doctest::Approx(kPi / 2).epsilon(1e-15));
}

TEST_CASE("min signal sits exactly on the distinguishability threshold") {
  const auto r = min_detectable_signal(AccuracySpec(1.0, 100));
  const auto s0 = binary_stats(1.0, 100);
  const auto at = binary_stats(0.5 * (1 + std::cos(r.min_signal_exact)), 100);
  const auto below = binary_stats(0.5 * (1 + std::cos(r.min_signal_exact * 0.999)), 100);
  CHECK(distinguishable_binary(s0, at, 1.0));
  CHECK_FALSE(distinguishable_binary(s0, below, 1.0));
  CHECK_FALSE(distinguishable_binary(s0, s0, 1e-9));
}

TEST_CASE("trade-off bound") {
  CHECK(tradeoff_bound(AccuracySpec(1.0, 100), 1.0) ==
        doctest::Approx(0.19900743804199782713).epsilon(1e-14));
  CHECK(tradeoff_bound(AccuracySpec(1.0, 100), 25.0) ==
        doctest::Approx(0.039801487608399565427).epsilon(1e-14));
  CHECK_THROWS_AS(tradeoff_bound(AccuracySpec(1.0, 100), 0.0), NoInformationError);
  CHECK(accuracy_of(0.2, 100) == doctest::Approx(1.0));
}

TEST_CASE("accuracy spec validation") {
  CHECK_THROWS_AS(AccuracySpec(0.0, 10), DomainError);
  CHECK_THROWS_AS(AccuracySpec(1.0, 0), DomainError);
  CHECK_THROWS_AS(AccuracySpec(1.0, 10, AccuracySpec::Split{3, 3}), DomainError);
  CHECK_NOTHROW(AccuracySpec(1.0, 12, AccuracySpec::Split{3, 4}));
}

TEST_CASE("POVM statistic reduces to the critical fidelity") {
  CHECK(povm_statistic(OutcomeStats({1.0, 0.0}, 10), OutcomeStats({0.9, 0.1}, 10)) ==
        doctest::Approx(1.0540925533894597773).epsilon(1e-14));
  const double f = critical_fidelity(AccuracySpec(2.0, 50));
  CHECK(povm_statistic(OutcomeStats({1.0, 0.0}, 50), OutcomeStats({f, 1 - f}, 50)) ==
        doctest::Approx(2.0).epsilon(1e-12));
  CHECK(std::isinf(povm_statistic(OutcomeStats({0.5, 0.5}, 10), OutcomeStats({1.0, 0.0}, 10))));
}

TEST_CASE("inherent precision at the optimal point") {
  const auto r = inherent_precision(kPi / 2, 100);
  CHECK(r.delta_phi == doctest::Approx(0.020001333573390491751).epsilon(1e-13));
  CHECK(r.accuracy == doctest::Approx(0.10000666786695245875).epsilon(1e-13));
  CHECK(inherent_precision(kPi / 2, 100, PhaseSide::TwoSided).delta_phi == r.delta_phi);
  CHECK(inherent_precision(kPi / 4, 100).delta_phi ==
        doctest::Approx(0.028700028633896671764).epsilon(1e-12));
}

TEST_CASE("one-sided step is smallest just above pi/2, two-sided exactly at pi/2") {
  const int grid = 10000;
  auto argmin = [&](PhaseSide side) {
    int best = -1;
    double best_step = INFINITY;
    for (int i = 1; i < grid; ++i) {
      const double phi0 = kPi * i / grid;
      try {
        const double d = inherent_precision(phi0, 100, side).delta_phi;
        if (d < best_step) {
          best_step = d;
          best = i;
        }
      } catch (const UnreachableError&) {
      }
    }
    return best;
  };
  CHECK(argmin(PhaseSide::TwoSided) == grid / 2);
  const int below = argmin(PhaseSide::Below);
  CHECK(below == 5032);
  CHECK(kPi * below / grid - kPi / 2 == doctest::Approx(0.01005).epsilon(0.01));
}

TEST_CASE("inherent precision unreachable region") {
  CHECK_THROWS_AS(inherent_precision(0.05, 100), UnreachableError);
  CHECK_THROWS_AS(inherent_precision(kPi - 0.05, 100, PhaseSide::Above), UnreachableError);
  CHECK_THROWS_AS(inherent_precision(kPi - 0.05, 100, PhaseSide::TwoSided), UnreachableError);
  CHECK_NOTHROW(inherent_precision(kPi - 0.05, 100, PhaseSide::Below));
}
