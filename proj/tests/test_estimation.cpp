#include <cmath>

#include "doctest.h"
#include "metrotrade/basis.hpp"
#include "metrotrade/errors.hpp"
#include "metrotrade/estimation.hpp"
#include "metrotrade/numeric.hpp"

using namespace metrotrade;

TEST_CASE("invert_phase endpoints") {
  CHECK(invert_phase(1.0) == 0.0);
  CHECK(invert_phase(0.0) == doctest::Approx(kPi));
  CHECK(invert_phase(0.5) == doctest::Approx(kPi / 2));
}

TEST_CASE("exact bias at pi/4, n=10 matches reference") {
  const auto r = exact_bias_report(kPi / 4, 10);
  CHECK(std::abs(r.bias_p) < 1e-12);
  CHECK(r.bias_phi == doctest::Approx(-0.097009403104363581389).epsilon(1e-12));
  CHECK(r.mean_phi_hat == doctest::Approx(0.68838876029308472823).epsilon(1e-12));
  CHECK(r.mse_phi == doctest::Approx(0.17529612968838378154).epsilon(1e-12));
  CHECK(r.var_phi == doctest::Approx(0.16588530539771887508).epsilon(1e-12));
  CHECK(std::abs(r.mse_phi - (r.var_phi + r.bias_phi * r.bias_phi)) < 1e-10);
}

TEST_CASE("exact bias at pi/3, n=64 matches reference") {
  const auto r = exact_bias_report(kPi / 3, 64);
  CHECK(r.bias_phi == doctest::Approx(-0.0046768363469603585838).epsilon(1e-10));
  CHECK(r.mse_phi == doctest::Approx(0.016041190865222579289).epsilon(1e-12));
  CHECK(r.var_phi == doctest::Approx(0.016019318067006329777).epsilon(1e-12));
  CHECK(r.mean_phi_hat == doctest::Approx(1.0425207148496373876).epsilon(1e-13));
}

TEST_CASE("phase estimator is unbiased at pi/2 by symmetry") {
  CHECK(std::abs(exact_bias_report(kPi / 2, 16).bias_phi) < 1e-12);
}

TEST_CASE("exact enumeration preconditions") {
  CHECK_THROWS_AS(exact_bias_report(0.0, 10), DomainError);
  CHECK_THROWS_AS(exact_bias_report(kPi, 10), DomainError);
  CHECK_THROWS_AS(exact_bias_report(1.0, 65), BudgetError);
  CHECK_THROWS_AS(monte_carlo_report(1.0, 10, 99, 1), DomainError);
}

TEST_CASE("Monte Carlo agrees with exact enumeration") {
  const auto exact = exact_bias_report(kPi / 4, 10);
  const auto mc = monte_carlo_report(kPi / 4, 10, 200000, 3);
  CHECK(mc.trials == 200000);
  CHECK(std::abs(mc.bias_phi - exact.bias_phi) < 5 * mc.bias_phi_stderr());
  CHECK(std::abs(mc.bias_p) < 5 * mc.bias_p_stderr());
  const auto again = monte_carlo_report(kPi / 4, 10, 200000, 3);
  CHECK(again.bias_phi == mc.bias_phi);
}

TEST_CASE("classical Fisher information") {
  CHECK(classical_fisher_information(MeasurementBasis(kPi / 4, 0.0), kPi / 6) ==
        doctest::Approx(0.2).epsilon(1e-14));
  CHECK(classical_fisher_information(MeasurementBasis(kPi / 2, 0.0), 0.0) ==
        doctest::Approx(1.0));
  CHECK(classical_fisher_information(MeasurementBasis(0.0, 0.0), 0.7) == 0.0);
}
