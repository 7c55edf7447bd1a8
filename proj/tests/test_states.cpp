#include <cmath>

#include "doctest.h"
#include "metrotrade/errors.hpp"
#include "metrotrade/numeric.hpp"
#include "metrotrade/states.hpp"

using namespace metrotrade;

TEST_CASE("single probe fidelity and signal") {
  const auto s = ProbePhaseState::single(kPi / 2);
  CHECK(fidelity(s, 0.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(signal(s, 0.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(fidelity(s, kPi / 2) == 1.0);
  CHECK(fidelity(ProbePhaseState::single(kPi), 0.0) < 1e-15);
}

TEST_CASE("product fidelity is the M-th power of the single-qubit fidelity") {
  const double delta = 0.37;
  const double single = fidelity(ProbePhaseState::single(delta), 0.0);
  for (int m : {1, 2, 5, 9}) {
    const double f = fidelity(ProbePhaseState::product(delta, m), 0.0);
    CHECK(f == doctest::Approx(std::pow(single, m)).epsilon(1e-14));
  }
  CHECK(fidelity(ProbePhaseState::product(delta, 1), 0.0) == single);
}

TEST_CASE("GHZ and nonlinear probes magnify the phase") {
  const double phi = 0.1;
  CHECK(fidelity(ProbePhaseState::ghz(phi, 4), 0.0) ==
        doctest::Approx(0.5 * (1 + std::cos(0.4))).epsilon(1e-15));
  const auto nl = ProbePhaseState::nonlinear(phi, 3, 2.0);
  CHECK(nl.frequency() == doctest::Approx(9.0));
  CHECK(fidelity(nl, 0.0) == doctest::Approx(0.5 * (1 + std::cos(0.9))).epsilon(1e-15));
}

TEST_CASE("phase is wrapped and differences use the principal branch") {
  const auto s = ProbePhaseState::single(-0.25);
  CHECK(s.phase() == doctest::Approx(kTwoPi - 0.25));
  CHECK(fidelity(s, 0.25) == doctest::Approx(fidelity(ProbePhaseState::single(0.5), 0.0)));
  CHECK(fidelity(ProbePhaseState::single(kTwoPi), 0.0) == 1.0);
}

TEST_CASE("canonical generator spreads and QFI") {
  CHECK(quantum_fisher_information(canonical_generator(ProbePhaseState::single(0.0))) == 1.0);
  CHECK(quantum_fisher_information(canonical_generator(ProbePhaseState::product(0.0, 8))) ==
        doctest::Approx(8.0));
  CHECK(quantum_fisher_information(canonical_generator(ProbePhaseState::ghz(0.0, 8))) ==
        doctest::Approx(64.0));
  CHECK(quantum_fisher_information(canonical_generator(ProbePhaseState::nonlinear(0.0, 2, 3.0))) ==
        doctest::Approx(64.0));
}

TEST_CASE("invalid probes are rejected") {
  CHECK_THROWS_AS(ProbePhaseState(ProbeKind::Single, 0.0, 2), DomainError);
  CHECK_THROWS_AS(ProbePhaseState::product(0.0, 0), DomainError);
  CHECK_THROWS_AS(ProbePhaseState::nonlinear(0.0, 2, 0.5), DomainError);
  CHECK_THROWS_AS(ProbePhaseState::single(std::nan("")), DomainError);
  CHECK_THROWS_AS(GeneratorSpec(-1.0), DomainError);
}
