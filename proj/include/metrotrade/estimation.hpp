#pragma once

#include <cstdint>
#include <string_view>

#include "metrotrade/basis.hpp"

namespace metrotrade {

enum class EstimationMode { ExactEnumeration, MonteCarlo };

std::string_view to_string(EstimationMode mode);

/// Moments of the frequency estimator p_hat = k/n and the phase estimator
/// phi_hat = arccos(2 p_hat - 1) for the single-qubit probe at phase phi.
///
/// For this binary model the maximum-likelihood estimate of p is k/n, so the
/// frequency estimator is also the MLE.
struct EstimatorReport {
  EstimationMode mode = EstimationMode::ExactEnumeration;
  double phi = 0.0;
  std::uint64_t n = 0;
  std::uint64_t trials = 0;  // MonteCarlo only
  double mean_p_hat = 0.0;
  double bias_p = 0.0;
  double mean_phi_hat = 0.0;
  double bias_phi = 0.0;
  double var_phi = 0.0;
  double mse_phi = 0.0;
  double var_p = 0.0;

  /// Standard error of bias_phi; zero in exact mode.
  [[nodiscard]] double bias_phi_stderr() const;
  [[nodiscard]] double bias_p_stderr() const;
};

/// arccos(2 p_hat - 1), in [0, pi].
double invert_phase(double p_hat);

EstimatorReport exact_bias_report(double phi, std::uint64_t n);

EstimatorReport monte_carlo_report(double phi, std::uint64_t n,
                                   std::uint64_t trials, std::uint64_t seed);

/// Classical Fisher information of the binary basis measurement with
/// respect to the signal phase. On the theta = pi/2 circle it equals the
/// analytic limit 1 even where an outcome is deterministic.
double classical_fisher_information(const MeasurementBasis& basis, double phi);

}  // namespace metrotrade
