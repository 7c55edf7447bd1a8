#include "metrotrade/resources.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "metrotrade/errors.hpp"
#include "metrotrade/numeric.hpp"
#include "metrotrade/sampling.hpp"

namespace metrotrade {

std::string_view to_string(Strategy strategy) {
  switch (strategy) {
    case Strategy::Ensemble:
      return "ensemble";
    case Strategy::Product:
      return "product";
    case Strategy::GHZ:
      return "ghz";
    case Strategy::Nonlinear:
      return "nonlinear";
  }
  return "unknown";
}

Strategy parse_strategy(std::string_view name) {
  for (auto s : {Strategy::Ensemble, Strategy::Product, Strategy::GHZ,
                 Strategy::Nonlinear}) {
    if (name == to_string(s)) return s;
  }
  throw DomainError("unknown strategy '" + std::string(name) + "'");
}

StrategyConfig::StrategyConfig(Strategy strategy, std::uint64_t particles,
                               std::uint64_t repetitions, double alpha,
                               double nonlinear_exponent)
    : strategy_(strategy),
      particles_(particles),
      repetitions_(repetitions),
      alpha_(alpha),
      exponent_(nonlinear_exponent) {
  if (particles == 0 || repetitions == 0) {
    throw DomainError("strategy needs M >= 1 and N >= 1");
  }
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw DomainError("accuracy alpha must be positive and finite");
  }
  if (!(nonlinear_exponent >= 1.0) || !std::isfinite(nonlinear_exponent)) {
    throw DomainError("nonlinear exponent must be a finite value >= 1");
  }
}

std::uint64_t StrategyConfig::effective_samples() const {
  return strategy_ == Strategy::Ensemble ? particles_ * repetitions_
                                         : repetitions_;
}

double StrategyConfig::frequency() const {
  const double m = static_cast<double>(particles_);
  switch (strategy_) {
    case Strategy::Ensemble:
    case Strategy::Product:
      return 1.0;
    case Strategy::GHZ:
      return m;
    case Strategy::Nonlinear:
      return std::pow(m, exponent_);
  }
  return 1.0;
}

ProbePhaseState StrategyConfig::probe(double phi) const {
  const int m = static_cast<int>(particles_);
  switch (strategy_) {
    case Strategy::Ensemble:
      return ProbePhaseState::single(phi);
    case Strategy::Product:
      return ProbePhaseState::product(phi, m);
    case Strategy::GHZ:
      return ProbePhaseState::ghz(phi, m);
    case Strategy::Nonlinear:
      return ProbePhaseState::nonlinear(phi, m, exponent_);
  }
  return ProbePhaseState::single(phi);
}

SignalNoise strategy_signal_noise(const StrategyConfig& cfg, double phi) {
  const double scaled = cfg.frequency() * phi;
  if (!(phi > 0.0 && scaled < kPi)) {
    throw BranchError("phase outside the monotone branch (0, pi / " +
                      std::to_string(cfg.frequency()) + ")");
  }
  const double f = fidelity(cfg.probe(phi), 0.0);
  return {1.0 - f, OutcomeStats::projection_noise(f, cfg.effective_samples())};
}

double product_noise_approximation(const StrategyConfig& cfg, double phi) {
  return std::sqrt(static_cast<double>(cfg.particles())) * phi /
         (2.0 * std::sqrt(static_cast<double>(cfg.repetitions())));
}

double strategy_min_signal(const StrategyConfig& cfg) {
  const double a2 = cfg.alpha() * cfg.alpha();
  const double m = static_cast<double>(cfg.particles());
  if (cfg.strategy() == Strategy::Ensemble) {
    const double n = static_cast<double>(cfg.effective_samples());
    return std::acos((n - a2) / (n + a2));
  }
  const double big_n = static_cast<double>(cfg.repetitions());
  const double f0 = big_n / (big_n + a2);
  if (cfg.strategy() == Strategy::Product) {
    return 2.0 * std::acos(std::pow(f0, 1.0 / (2.0 * m)));
  }
  return 2.0 / cfg.frequency() * std::acos(std::sqrt(f0));
}

double least_squares_slope(std::span<const double> x,
                           std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw FitError("slope fit needs at least two paired points");
  }
  const double count = static_cast<double>(x.size());
  CompensatedSum sx;
  CompensatedSum sy;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
  }
  const double mx = sx.value() / count;
  const double my = sy.value() / count;
  CompensatedSum sxy;
  CompensatedSum sxx;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  if (!(sxx.value() > 0.0)) throw FitError("slope fit over a degenerate grid");
  return sxy.value() / sxx.value();
}

ScalingReport fit_scaling(Strategy strategy,
                          std::span<const std::uint64_t> particle_grid,
                          std::uint64_t repetitions, double alpha,
                          double nonlinear_exponent) {
  std::vector<std::uint64_t> grid(particle_grid.begin(), particle_grid.end());
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  if (grid.size() < 2) {
    throw FitError("scaling fit needs at least two distinct values of M");
  }

  ScalingReport report;
  report.strategy = strategy;
  std::vector<double> log_m;
  std::vector<double> log_phi;
  for (auto m : grid) {
    const StrategyConfig cfg(strategy, m, repetitions, alpha,
                             nonlinear_exponent);
    const double phi = strategy_min_signal(cfg);
    const auto sn = strategy_signal_noise(cfg, phi);
    report.resources.push_back(m);
    report.phis.push_back(phi);
    report.signals.push_back(sn.signal);
    report.noises.push_back(sn.noise);
    log_m.push_back(std::log(static_cast<double>(m)));
    log_phi.push_back(std::log(phi));
  }
  report.min_signal = *std::min_element(report.phis.begin(), report.phis.end());
  report.fitted_exponent = least_squares_slope(log_m, log_phi);
  return report;
}

}  // namespace metrotrade
