#include <cmath>

#include "doctest.h"
#include "metrotrade/basis.hpp"
#include "metrotrade/bounds.hpp"
#include "metrotrade/estimation.hpp"
#include "metrotrade/numeric.hpp"
#include "metrotrade/resources.hpp"
#include "metrotrade/states.hpp"
#include "metrotrade/verify/checks.hpp"
#include "metrotrade/verify/oracles.hpp"

using namespace metrotrade;

TEST_CASE("bisection agrees with the closed-form minimum signal") {
  for (std::uint64_t n : {1ull, 7ull, 100ull, 1000ull}) {
    for (double a : {0.5, 1.0, 3.0}) {
      const double closed = min_detectable_signal(AccuracySpec(a, n)).min_signal_exact;
      CHECK(oracle::bisect_min_signal(n, a) == doctest::Approx(closed).epsilon(1e-12));
    }
  }
  CHECK(oracle::bisect_inherent_step(kPi / 2, 100) ==
        doctest::Approx(inherent_precision(kPi / 2, 100).delta_phi).epsilon(1e-12));
}

TEST_CASE("curvature of the fidelity gives the QFI") {
  for (const auto& s : {ProbePhaseState::single(0.0), ProbePhaseState::product(0.0, 5),
                        ProbePhaseState::ghz(0.0, 5)}) {
    CHECK(oracle::curvature_fisher(s) ==
          doctest::Approx(quantum_fisher_information(canonical_generator(s))).epsilon(1e-6));
  }
}

TEST_CASE("finite-difference classical Fisher information") {
  const MeasurementBasis b(kPi / 4, 0.0);
  CHECK(oracle::finite_difference_fisher(b, kPi / 6) ==
        doctest::Approx(classical_fisher_information(b, kPi / 6)).epsilon(1e-7));
}

TEST_CASE("statevector product fidelity") {
  for (int m : {1, 3, 6}) {
    CHECK(oracle::statevector_product_fidelity(m, 0.3) ==
          doctest::Approx(fidelity(ProbePhaseState::product(0.3, m), 0.0)).epsilon(1e-13));
  }
}

TEST_CASE("detection rate at the GHZ threshold") {
  const StrategyConfig cfg(Strategy::GHZ, 4, 100);
  const double at = oracle::exact_distinguish_rate(cfg, strategy_min_signal(cfg));
  const double half = oracle::exact_distinguish_rate(cfg, strategy_min_signal(cfg) / 2);
  CHECK(at > 0.5);
  CHECK(half < at);
}

TEST_CASE("SVG structural check rejects malformed input") {
  CHECK(oracle::svg_polyline_count("<svg viewBox=\"0 0 1 1\"><polyline points=\"0,0 1,1\"/></svg>") == 1);
  CHECK(oracle::svg_polyline_count("<svg><g></svg>") == -1);
  CHECK(oracle::svg_polyline_count("<svg><image href=\"x.png\"/></svg>") == -1);
}

TEST_CASE("corrupted check fails and names itself") {
  verify::VerifyOptions options;
  options.corrupt = {"AC5"};
  const auto checks = verify::acceptance_checks();
  for (const auto& c : checks) {
    if (c.id != "AC5") continue;
    const auto outcome = verify::run_check(c, options);
    CHECK_FALSE(outcome.passed);
    CHECK(verify::format_report({outcome}).find("[FAIL] AC5") != std::string::npos);
    CHECK(verify::run_check(c, verify::VerifyOptions{}).passed);
  }
}
