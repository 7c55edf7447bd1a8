#pragma once

// Reference computations that deliberately avoid the closed forms they are
// used to check: bisection on raw inequalities, finite differences,
// statevector products and exhaustive enumeration.

#include <cstdint>
#include <string_view>

#include "metrotrade/basis.hpp"
#include "metrotrade/resources.hpp"
#include "metrotrade/states.hpp"

namespace metrotrade::oracle {

/// Smallest phi for which distinguishable_binary accepts the pair
/// p0 = 1, p1 = (1 + cos phi)/2, found by bisection on (0, pi].
double bisect_min_signal(std::uint64_t n, double alpha);

/// Step delta below phi0 with p(phi0 - delta) - p(phi0) = 1/n for the Ramsey
/// probability p = (1 + cos)/2, by bisection.
double bisect_inherent_step(double phi0, std::uint64_t n);

/// -2 d^2F/dDelta^2 at Delta = 0, central difference with step h.
double curvature_fisher(const ProbePhaseState& family, double h = 1e-4);

/// (dp/dphi)^2 [1/p + 1/(1-p)] with dp/dphi from a central difference.
double finite_difference_fisher(const MeasurementBasis& basis, double phi,
                                double h = 1e-5);

/// |<+|^{(x)M} |psi(delta)>^{(x)M}|^2 from explicit 2^M-component state
/// vectors. Requires M <= 12.
double statevector_product_fidelity(int particles, double delta);

/// Probability that distinguishable_binary accepts, when the initial probe
/// is deterministic (p0 = 1) and the final-state frequency is k/n_eff with
/// k ~ Binomial(n_eff, F), F the probe fidelity at phi. Exhaustive over k.
double exact_distinguish_rate(const StrategyConfig& cfg, double phi);

/// Structural well-formedness: balanced tags, single root <svg>, no
/// external references. Returns the number of <polyline> elements, or -1.
int svg_polyline_count(std::string_view svg);

}  // namespace metrotrade::oracle
