#include <cmath>

#include "doctest.h"
#include "metrotrade/basis.hpp"
#include "metrotrade/errors.hpp"
#include "metrotrade/numeric.hpp"

using namespace metrotrade;

TEST_CASE("optimal SNR at phi = pi/10") {
  const auto opt = find_optimal_basis(kPi / 10, 1);
  CHECK(max_snr(kPi / 10, 1) == doctest::Approx(0.15838444032453629384).epsilon(1e-14));
  CHECK(opt.snr == doctest::Approx(0.15838444032453629384).epsilon(1e-6));
  CHECK(opt.snr <= max_snr(kPi / 10, 1) * (1 + 1e-12));
  CHECK(opt.best.theta() == doctest::Approx(kPi / 2).epsilon(1e-3));
  CHECK(in_optimal_set(opt.best.phi_b(), kPi / 10, 1e-3));
}

TEST_CASE("SNR is constant on the optimal set") {
  const double phi = kPi / 10;
  for (double pb : {phi, 2.0, kPi, phi + kPi, 5.5}) {
    CHECK(in_optimal_set(pb, phi));
    CHECK(basis_snr(MeasurementBasis(kPi / 2, pb), phi, 1) ==
          doctest::Approx(std::tan(phi / 2)).epsilon(1e-13));
  }
  CHECK_FALSE(in_optimal_set(0.1, phi));
}

TEST_CASE("SNR homogeneity and trivial rows") {
  const MeasurementBasis b(1.1, 0.7);
  CHECK(basis_snr(b, 0.3, 2) == doctest::Approx(std::sqrt(2.0) * basis_snr(b, 0.3, 1)));
  CHECK(basis_snr(MeasurementBasis(0.0, 1.0), 0.3, 5) == 0.0);
}

TEST_CASE("precision from SNR") {
  CHECK(precision_from_snr(0.05 * 10, 100) == doctest::Approx(0.09991679144388552282).epsilon(1e-14));
}

TEST_CASE("basis validation") {
  CHECK_THROWS_AS(MeasurementBasis(-0.1, 0.0), DomainError);
  CHECK_THROWS_AS(MeasurementBasis(0.1, kTwoPi), DomainError);
}
