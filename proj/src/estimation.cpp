#include "metrotrade/estimation.hpp"

#include <cmath>

#include "metrotrade/errors.hpp"
#include "metrotrade/numeric.hpp"
#include "metrotrade/sampling.hpp"

namespace metrotrade {
namespace {

constexpr std::uint64_t kMinTrials = 100;

double ramsey_probability(double phi) { return 0.5 * (1.0 + std::cos(phi)); }

// Accumulates deviations from the true values; the second moment of the
// deviation is the MSE directly.
struct MomentAccumulator {
  CompensatedSum p_dev;
  CompensatedSum p_dev_sq;
  CompensatedSum phi_dev;
  CompensatedSum phi_dev_sq;

  void add(double weight, double p_hat, double phi_hat, double p,
           double phi) {
    const double dp = p_hat - p;
    const double dphi = phi_hat - phi;
    p_dev += weight * dp;
    p_dev_sq += weight * dp * dp;
    phi_dev += weight * dphi;
    phi_dev_sq += weight * dphi * dphi;
  }

  void finish(EstimatorReport& r, double normalization, double p,
              double phi) const {
    r.bias_p = p_dev.value() / normalization;
    r.mean_p_hat = p + r.bias_p;
    r.var_p = p_dev_sq.value() / normalization - r.bias_p * r.bias_p;
    r.bias_phi = phi_dev.value() / normalization;
    r.mean_phi_hat = phi + r.bias_phi;
    r.mse_phi = phi_dev_sq.value() / normalization;
    r.var_phi = r.mse_phi - r.bias_phi * r.bias_phi;
  }
};

void check_decomposition(const EstimatorReport& r) {
  if (std::fabs(r.mse_phi - (r.var_phi + r.bias_phi * r.bias_phi)) > 1e-10) {
    throw DomainError("MSE decomposition failed to close");
  }
}

void check_phase(double phi) {
  if (!(phi > 0.0 && phi < kPi)) {
    throw DomainError("estimation phase must lie in (0, pi)");
  }
}

}  // namespace

std::string_view to_string(EstimationMode mode) {
  return mode == EstimationMode::ExactEnumeration ? "ExactEnumeration"
                                                  : "MonteCarlo";
}

double EstimatorReport::bias_phi_stderr() const {
  if (mode == EstimationMode::ExactEnumeration || trials == 0) return 0.0;
  return std::sqrt(var_phi / static_cast<double>(trials));
}

double EstimatorReport::bias_p_stderr() const {
  if (mode == EstimationMode::ExactEnumeration || trials == 0) return 0.0;
  return std::sqrt(var_p / static_cast<double>(trials));
}

double invert_phase(double p_hat) {
  if (!(p_hat >= 0.0 && p_hat <= 1.0)) {
    throw DomainError("probability estimate outside [0, 1]");
  }
  // 2p - 1 is exact at the endpoints, so the result is total on [0, 1].
  return std::acos(2.0 * p_hat - 1.0);
}

EstimatorReport exact_bias_report(double phi, std::uint64_t n) {
  check_phase(phi);
  const double p = ramsey_probability(phi);
  const auto pmf = enumerate_binomial(p, n);
  MomentAccumulator acc;
  const double nd = static_cast<double>(n);
  for (const auto& [k, weight] : pmf) {
    const double p_hat = static_cast<double>(k) / nd;
    acc.add(weight, p_hat, invert_phase(p_hat), p, phi);
  }
  EstimatorReport r;
  r.mode = EstimationMode::ExactEnumeration;
  r.phi = phi;
  r.n = n;
  acc.finish(r, 1.0, p, phi);
  check_decomposition(r);
  return r;
}

EstimatorReport monte_carlo_report(double phi, std::uint64_t n,
                                   std::uint64_t trials, std::uint64_t seed) {
  check_phase(phi);
  if (n == 0) throw DomainError("sample budget must be positive");
  if (trials < kMinTrials) {
    throw DomainError("Monte Carlo needs at least 100 trials");
  }
  const double p = ramsey_probability(phi);
  const double nd = static_cast<double>(n);
  MomentAccumulator acc;
  for (std::uint64_t t = 0; t < trials; ++t) {
    CounterRng rng(seed, t);
    const auto k = sample_binomial(n, p, rng);
    const double p_hat = static_cast<double>(k) / nd;
    acc.add(1.0, p_hat, invert_phase(p_hat), p, phi);
  }
  EstimatorReport r;
  r.mode = EstimationMode::MonteCarlo;
  r.phi = phi;
  r.n = n;
  r.trials = trials;
  acc.finish(r, static_cast<double>(trials), p, phi);
  check_decomposition(r);
  return r;
}

double classical_fisher_information(const MeasurementBasis& basis,
                                    double phi) {
  // p = (1 + s cos d)/2, dp/dphi = -(s/2) sin d, with d = phi - phi_b.
  // sum_outcomes (dp)^2 / p = (dp)^2 / (p (1 - p))
  //                         = s^2 sin^2 d / (sin^2 d + cos^2(theta) cos^2 d).
  const double s = std::sin(basis.theta());
  // cos(theta) as sin(pi/2 - theta) so the equator theta = pi/2 gives c = 0
  // exactly and the deterministic points take the s^2 limit.
  const double c = std::sin(kPi / 2 - basis.theta());
  const double d = phi - basis.phi_b();
  const double sd = std::sin(d);
  const double cd = std::cos(d);
  const double numerator = s * s * sd * sd;
  const double denominator = sd * sd + c * c * cd * cd;
  if (denominator == 0.0) {
    // Only reachable with cos(theta) = 0 and sin d = 0; the limit along phi
    // is s^2.
    return s * s;
  }
  return numerator / denominator;
}

}  // namespace metrotrade
