#include "metrotrade/states.hpp"

#include <cmath>
#include <string>

#include "metrotrade/errors.hpp"
#include "metrotrade/numeric.hpp"

namespace metrotrade {

std::string_view to_string(ProbeKind kind) {
  switch (kind) {
    case ProbeKind::Single:
      return "single";
    case ProbeKind::Product:
      return "product";
    case ProbeKind::GHZ:
      return "ghz";
    case ProbeKind::Nonlinear:
      return "nonlinear";
  }
  return "unknown";
}

ProbePhaseState::ProbePhaseState(ProbeKind kind, double phase, int particles,
                                 double nonlinear_exponent)
    : kind_(kind),
      phase_(0.0),
      particles_(particles),
      exponent_(nonlinear_exponent) {
  if (!std::isfinite(phase)) throw DomainError("probe phase must be finite");
  if (particles < 1) throw DomainError("probe needs at least one particle");
  if (!(nonlinear_exponent >= 1.0) || !std::isfinite(nonlinear_exponent)) {
    throw DomainError("nonlinear exponent must be a finite value >= 1");
  }
  if (kind == ProbeKind::Single && particles != 1) {
    throw DomainError("single-qubit probe must have exactly one particle");
  }
  phase_ = wrap_phase(phase);
}

double ProbePhaseState::frequency() const {
  switch (kind_) {
    case ProbeKind::Single:
    case ProbeKind::Product:
      return 1.0;
    case ProbeKind::GHZ:
      return static_cast<double>(particles_);
    case ProbeKind::Nonlinear:
      return std::pow(static_cast<double>(particles_), exponent_);
  }
  return 1.0;
}

GeneratorSpec::GeneratorSpec(double spread) : spread_(spread) {
  if (!(spread >= 0.0) || !std::isfinite(spread)) {
    throw DomainError("generator spread must be finite and non-negative");
  }
}

GeneratorSpec canonical_generator(const ProbePhaseState& state) {
  const double m = static_cast<double>(state.particles());
  switch (state.kind()) {
    case ProbeKind::Single:
      return GeneratorSpec(0.5);
    case ProbeKind::Product:
      return GeneratorSpec(0.5 * std::sqrt(m));
    case ProbeKind::GHZ:
    case ProbeKind::Nonlinear:
      return GeneratorSpec(0.5 * state.frequency());
  }
  return GeneratorSpec(0.5);
}

double fidelity(const ProbePhaseState& state, double reference_phase) {
  const double delta = principal_difference(state.phase() - reference_phase);
  if (state.kind() == ProbeKind::Product && state.particles() > 1) {
    const double c = std::cos(0.5 * delta);
    return std::pow(c * c, state.particles());
  }
  return 0.5 * (1.0 + std::cos(state.frequency() * delta));
}

double signal(const ProbePhaseState& state, double reference_phase) {
  return 1.0 - fidelity(state, reference_phase);
}

double quantum_fisher_information(const GeneratorSpec& gen) {
  return 4.0 * gen.spread() * gen.spread();
}

}  // namespace metrotrade
