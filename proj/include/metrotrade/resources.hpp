#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "metrotrade/states.hpp"

namespace metrotrade {

enum class Strategy { Ensemble, Product, GHZ, Nonlinear };

std::string_view to_string(Strategy strategy);
Strategy parse_strategy(std::string_view name);

/// How M particles and N repetitions are spent. Ensemble members are
/// measured one by one (n_eff = M N); Product, GHZ and Nonlinear probes are
/// measured as a single M-body state (n_eff = N).
class StrategyConfig {
 public:
  StrategyConfig(Strategy strategy, std::uint64_t particles,
                 std::uint64_t repetitions, double alpha = 1.0,
                 double nonlinear_exponent = 1.0);

  [[nodiscard]] Strategy strategy() const { return strategy_; }
  [[nodiscard]] std::uint64_t particles() const { return particles_; }
  [[nodiscard]] std::uint64_t repetitions() const { return repetitions_; }
  [[nodiscard]] double alpha() const { return alpha_; }
  [[nodiscard]] double nonlinear_exponent() const { return exponent_; }

  [[nodiscard]] std::uint64_t effective_samples() const;
  /// Phase magnification: 1, 1, M, M^k.
  [[nodiscard]] double frequency() const;
  /// The probe measured once per repetition, carrying phase `phi`.
  [[nodiscard]] ProbePhaseState probe(double phi) const;

 private:
  Strategy strategy_;
  std::uint64_t particles_;
  std::uint64_t repetitions_;
  double alpha_;
  double exponent_;
};

struct SignalNoise {
  double signal;
  double noise;
};

/// Probability signal 1 - F and exact projection noise sqrt(F(1-F)/n_eff).
/// Throws BranchError unless 0 < frequency * phi < pi.
SignalNoise strategy_signal_noise(const StrategyConfig& cfg, double phi);

/// Small-signal form of the Product noise, sqrt(M) phi / (2 sqrt(N)).
double product_noise_approximation(const StrategyConfig& cfg, double phi);

/// Minimum detectable phase of the strategy at its critical fidelity
/// F0 = N / (N + alpha^2).
double strategy_min_signal(const StrategyConfig& cfg);

struct ScalingReport {
  Strategy strategy;
  std::vector<std::uint64_t> resources;
  std::vector<double> phis;  // min signal per resource value
  std::vector<double> signals;
  std::vector<double> noises;
  double min_signal = 0.0;
  double fitted_exponent = 0.0;
};

/// Least-squares slope of log(min signal) against log(M) at fixed N.
ScalingReport fit_scaling(Strategy strategy,
                          std::span<const std::uint64_t> particle_grid,
                          std::uint64_t repetitions, double alpha,
                          double nonlinear_exponent = 1.0);

/// Ordinary least-squares slope of y against x.
double least_squares_slope(std::span<const double> x, std::span<const double> y);

}  // namespace metrotrade
