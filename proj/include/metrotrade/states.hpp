#pragma once

#include <string_view>

namespace metrotrade {

enum class ProbeKind { Single, Product, GHZ, Nonlinear };

std::string_view to_string(ProbeKind kind);

/// Equatorial qubit-family probe after accumulating a phase.
///
/// Single is (|0> + e^{i phase}|1>)/sqrt(2); Product is M copies of it; GHZ is
/// (|0..0> + e^{i M phase}|1..1>)/sqrt(2); Nonlinear is modelled as a GHZ-type
/// two-level splitting whose effective frequency is M^k.
///
/// The phase is reduced into [0, 2pi) on construction.
class ProbePhaseState {
 public:
  ProbePhaseState(ProbeKind kind, double phase, int particles = 1,
                  double nonlinear_exponent = 1.0);

  static ProbePhaseState single(double phase) {
    return {ProbeKind::Single, phase};
  }
  static ProbePhaseState product(double phase, int particles) {
    return {ProbeKind::Product, phase, particles};
  }
  static ProbePhaseState ghz(double phase, int particles) {
    return {ProbeKind::GHZ, phase, particles};
  }
  static ProbePhaseState nonlinear(double phase, int particles,
                                   double exponent) {
    return {ProbeKind::Nonlinear, phase, particles, exponent};
  }

  [[nodiscard]] ProbeKind kind() const { return kind_; }
  [[nodiscard]] double phase() const { return phase_; }
  [[nodiscard]] int particles() const { return particles_; }
  [[nodiscard]] double nonlinear_exponent() const { return exponent_; }

  /// Rate at which the relative phase of the two branches accumulates:
  /// 1 for Single and Product, M for GHZ, M^k for Nonlinear.
  [[nodiscard]] double frequency() const;

  [[nodiscard]] ProbePhaseState with_phase(double phase) const {
    return {kind_, phase, particles_, exponent_};
  }

 private:
  ProbeKind kind_;
  double phase_;
  int particles_;
  double exponent_;
};

/// Standard deviation of the phase generator on the probe.
class GeneratorSpec {
 public:
  explicit GeneratorSpec(double spread);
  [[nodiscard]] double spread() const { return spread_; }

 private:
  double spread_;
};

/// Generator spread of the probe family: 1/2, sqrt(M)/2, M/2, M^k/2.
GeneratorSpec canonical_generator(const ProbePhaseState& state);

/// |<reference|state>|^2 where the reference is the same family at
/// `reference_phase`. The phase difference is taken on its principal branch.
double fidelity(const ProbePhaseState& state, double reference_phase);

/// Probability signal 1 - fidelity.
double signal(const ProbePhaseState& state, double reference_phase);

double quantum_fisher_information(const GeneratorSpec& gen);

}  // namespace metrotrade
