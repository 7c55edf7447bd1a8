#include <cmath>
#include <vector>

#include "doctest.h"
#include "metrotrade/errors.hpp"
#include "metrotrade/resources.hpp"

using namespace metrotrade;

TEST_CASE("strategy minimum signals") {
  CHECK(strategy_min_signal(StrategyConfig(Strategy::Product, 4, 100)) ==
        doctest::Approx(0.099730668095993443085).epsilon(1e-13));
  CHECK(strategy_min_signal(StrategyConfig(Strategy::GHZ, 4, 100)) ==
        doctest::Approx(0.049834326245581013689).epsilon(1e-13));
  CHECK(strategy_min_signal(StrategyConfig(Strategy::Ensemble, 4, 100)) ==
        doctest::Approx(std::acos(399.0 / 401.0)).epsilon(1e-14));
}

TEST_CASE("nonlinear exponent one coincides with GHZ") {
  CHECK(strategy_min_signal(StrategyConfig(Strategy::Nonlinear, 6, 50, 1.0, 1.0)) ==
        doctest::Approx(strategy_min_signal(StrategyConfig(Strategy::GHZ, 6, 50))));
}

TEST_CASE("fitted scaling exponents") {
  const std::vector<std::uint64_t> grid{2, 4, 8, 16, 32};
  CHECK(fit_scaling(Strategy::GHZ, grid, 100, 1.0).fitted_exponent ==
        doctest::Approx(-1.0).epsilon(0.01));
  CHECK(fit_scaling(Strategy::Product, grid, 100, 1.0).fitted_exponent ==
        doctest::Approx(-0.5).epsilon(0.01));
  CHECK(fit_scaling(Strategy::Ensemble, grid, 100, 1.0).fitted_exponent ==
        doctest::Approx(-0.5).epsilon(0.01));
  const std::vector<std::uint64_t> short_grid{2, 3, 4, 5};
  CHECK(fit_scaling(Strategy::Nonlinear, short_grid, 100, 1.0, 2.0).fitted_exponent ==
        doctest::Approx(-2.0).epsilon(0.02));
  const std::vector<std::uint64_t> single{4, 4};
  CHECK_THROWS_AS(fit_scaling(Strategy::GHZ, single, 100, 1.0), FitError);
}

TEST_CASE("signal and noise of a GHZ probe") {
  const StrategyConfig cfg(Strategy::GHZ, 4, 100);
  const auto sn = strategy_signal_noise(cfg, 0.1);
  const double f = 0.5 * (1 + std::cos(0.4));
  CHECK(sn.signal == doctest::Approx(1 - f));
  CHECK(sn.noise == doctest::Approx(std::sqrt(f * (1 - f) / 100)));
  CHECK_THROWS_AS(strategy_signal_noise(cfg, 1.0), BranchError);
  CHECK_THROWS_AS(strategy_signal_noise(cfg, 0.0), BranchError);
}

TEST_CASE("product noise approximation at small phase") {
  const StrategyConfig cfg(Strategy::Product, 9, 100);
  const auto sn = strategy_signal_noise(cfg, 1e-3);
  CHECK(sn.noise == doctest::Approx(product_noise_approximation(cfg, 1e-3)).epsilon(1e-3));
}

TEST_CASE("strategy parsing and regression helper") {
  CHECK(parse_strategy("ghz") == Strategy::GHZ);
  CHECK(to_string(Strategy::Ensemble) == "ensemble");
  CHECK_THROWS_AS(parse_strategy("squeezed"), DomainError);
  const std::vector<double> x{1, 2, 3};
  const std::vector<double> y{2, 4, 6};
  CHECK(least_squares_slope(x, y) == doctest::Approx(2.0));
}
