#include <cmath>
#include <vector>

#include "doctest.h"
#include "metrotrade/commands.hpp"
#include "metrotrade/errors.hpp"
#include "metrotrade/numeric.hpp"
#include "metrotrade/verify/oracles.hpp"

using namespace metrotrade;

namespace {

double cell(const Table& t, std::size_t row, std::string_view column) {
  return parse_real_cell(t.rows().at(row).at(t.column(column))).value();
}

}  // namespace

TEST_CASE("tradeoff rows") {
  const std::vector<std::uint64_t> n{1, 100};
  const std::vector<double> alpha{1.0, 2.0};
  const auto t = cmd_tradeoff(n, alpha);
  REQUIRE(t.rows().size() == 4);
  CHECK(cell(t, 0, "exact_bound") == doctest::Approx(kPi / 2));
  CHECK(cell(t, 2, "correction_ratio") == doctest::Approx(1.9933730498232405476).epsilon(1e-14));
  CHECK(cell(t, 3, "asymptotic_bound") == doctest::Approx(2 * cell(t, 2, "asymptotic_bound")));
  CHECK(oracle::svg_polyline_count(render_svg(t, tradeoff_charts())) > 0);
}

TEST_CASE("inherent sweep peaks at pi/2") {
  const auto t = cmd_inherent(100, 10000);
  REQUIRE(t.rows().size() == 9999);
  std::size_t best = 0;
  double best_resolution = 0.0;
  bool saw_unreachable = false;
  for (std::size_t i = 0; i < t.rows().size(); ++i) {
    if (t.rows()[i][t.column("status")] != "ok") {
      saw_unreachable = true;
      continue;
    }
    const double r = cell(t, i, "resolution");
    if (r > best_resolution) {
      best_resolution = r;
      best = i;
    }
  }
  CHECK(saw_unreachable);
  CHECK(best == 4999);
  CHECK(best_resolution == doctest::Approx(49.996666288811197272).epsilon(1e-12));
  CHECK(cell(t, best, "accuracy") == doctest::Approx(0.10000666786695245875).epsilon(1e-12));
  CHECK_THROWS_AS(cmd_inherent(2, 100), DomainError);
}

TEST_CASE("basis sweep summary rows") {
  const auto t = cmd_basis_sweep(kPi / 10, 1, 41);
  const auto& last = t.rows().back();
  CHECK(last[0] == "analytic_max");
  CHECK(parse_real_cell(last[t.column("snr")]).value() ==
        doctest::Approx(0.15838444032453629384).epsilon(1e-14));
  CHECK(cell(t, 0, "snr") == 0.0);
  const auto doubled = cmd_basis_sweep(kPi / 10, 2, 41);
  CHECK(cell(doubled, 100, "snr") == doctest::Approx(std::sqrt(2.0) * cell(t, 100, "snr")));
  CHECK(oracle::svg_polyline_count(render_svg(t, basis_sweep_charts(t, 41))) > 0);
}

TEST_CASE("resources table") {
  const std::vector<Strategy> s{Strategy::GHZ, Strategy::Ensemble};
  const std::vector<std::uint64_t> m{2, 4, 8, 16, 32};
  const auto t = cmd_resources(s, m, 100, 1.0, 2.0);
  REQUIRE(t.rows().size() == 10);
  CHECK(cell(t, 1, "min_signal") == doctest::Approx(0.049834326245581013689).epsilon(1e-13));
  CHECK(cell(t, 0, "fitted_exponent") == doctest::Approx(-1.0).epsilon(0.01));
  CHECK(cell(t, 5, "fitted_exponent") == doctest::Approx(-0.5).epsilon(0.01));
}

TEST_CASE("bias-mc rows agree") {
  const auto t = cmd_bias_mc(kPi / 4, 10, 100000, 5);
  REQUIRE(t.rows().size() == 2);
  CHECK(t.rows()[0][0] == "ExactEnumeration");
  CHECK(t.rows()[1][0] == "MonteCarlo");
  CHECK(std::abs(cell(t, 0, "bias_p")) < 1e-12);
  for (std::size_t r = 0; r < 2; ++r) {
    const double b = cell(t, r, "bias_phi");
    CHECK(std::abs(cell(t, r, "mse_phi") - cell(t, r, "var_phi") - b * b) < 1e-10);
  }
  CHECK(cmd_bias_mc(kPi / 4, 100, 1000, 5).rows().size() == 1);
  CHECK(cmd_bias_mc(kPi / 4, 10, 1000, 5).to_csv() == cmd_bias_mc(kPi / 4, 10, 1000, 5).to_csv());
}
