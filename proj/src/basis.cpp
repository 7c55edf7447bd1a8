#include "metrotrade/basis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "metrotrade/errors.hpp"
#include "metrotrade/numeric.hpp"

namespace metrotrade {
namespace {

// sqrt(1 - sin^2(theta) cos^2(x)) written as sqrt(sin^2 x + cos^2 theta cos^2 x)
// so it stays accurate where the two terms nearly cancel.
double half_width(double cos_theta, double x) {
  const double s = std::sin(x);
  const double c = std::cos(x);
  return std::sqrt(s * s + cos_theta * cos_theta * c * c);
}

template <class F>
double golden_section_max(F&& f, double lo, double hi, double& best_value) {
  constexpr double kInvPhi = 0.6180339887498948482;
  double a = lo;
  double b = hi;
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  for (int iter = 0; iter < 200 && (b - a) > 1e-13; ++iter) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = f(x1);
    }
  }
  const double x = f1 >= f2 ? x1 : x2;
  best_value = std::max(f1, f2);
  return x;
}

double interval_distance(double x, double lo, double hi) {
  if (x >= lo && x <= hi) return 0.0;
  const double d_lo = std::fabs(principal_difference(x - lo));
  const double d_hi = std::fabs(principal_difference(x - hi));
  return std::min(d_lo, d_hi);
}

}  // namespace

MeasurementBasis::MeasurementBasis(double theta, double phi_b)
    : theta_(theta), phi_b_(phi_b) {
  if (!(theta >= 0.0 && theta <= kPi)) {
    throw DomainError("basis polar angle must lie in [0, pi]");
  }
  if (!(phi_b >= 0.0 && phi_b < kTwoPi)) {
    throw DomainError("basis azimuth must lie in [0, 2pi)");
  }
}

BasisProbabilities basis_probabilities(const MeasurementBasis& basis,
                                       double phi) {
  const double s = std::sin(basis.theta());
  return {0.5 * (1.0 + s * std::cos(basis.phi_b())),
          0.5 * (1.0 + s * std::cos(phi - basis.phi_b()))};
}

double basis_snr(const MeasurementBasis& basis, double phi, std::uint64_t n) {
  const double s = std::sin(basis.theta());
  const double c = std::cos(basis.theta());
  const double a = basis.phi_b();
  const double b = phi - basis.phi_b();
  const double numerator =
      std::sqrt(static_cast<double>(n)) * s * (std::cos(a) - std::cos(b));
  const double denominator = half_width(c, a) + half_width(c, b);
  if (denominator == 0.0) {
    return numerator == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  }
  return std::fabs(numerator / denominator);
}

double max_snr(double phi, std::uint64_t n) {
  return std::sqrt(static_cast<double>(n)) * std::fabs(std::tan(0.5 * phi));
}

bool in_optimal_set(double phi_b, double phi, double tolerance) {
  const double b = wrap_phase(phi_b);
  const double f = wrap_phase(phi);
  double d = 0.0;
  if (f <= kPi) {
    d = std::min(interval_distance(b, f, kPi),
                 interval_distance(b, f + kPi, kTwoPi));
  } else {
    d = std::min(interval_distance(b, 0.0, f - kPi),
                 interval_distance(b, kPi, f));
  }
  return d <= tolerance;
}

OptimalBasis find_optimal_basis(double phi, std::uint64_t n,
                                const BasisGrid& grid) {
  if (grid.theta_points < 2 || grid.phase_points < 2) {
    throw DomainError("basis grid needs at least two points per axis");
  }
  if (n == 0) throw DomainError("sample budget must be positive");

  const double d_theta = kPi / (grid.theta_points - 1);
  const double d_phase = kTwoPi / grid.phase_points;
  double best_theta = 0.0;
  double best_phase = 0.0;
  double best = -1.0;
  for (int i = 0; i < grid.theta_points; ++i) {
    const double theta = std::min(kPi, i * d_theta);
    for (int j = 0; j < grid.phase_points; ++j) {
      const double phase = j * d_phase;
      const double v = basis_snr(MeasurementBasis(theta, phase), phi, n);
      if (v > best) {
        best = v;
        best_theta = theta;
        best_phase = phase;
      }
    }
  }
  const double grid_max = best;
  if (!grid.refine || !std::isfinite(best)) {
    return {MeasurementBasis(best_theta, best_phase), best, grid_max};
  }

  auto snr_at = [&](double theta, double phase) {
    return basis_snr(MeasurementBasis(std::clamp(theta, 0.0, kPi),
                                      wrap_phase(phase)),
                     phi, n);
  };
  for (int pass = 0; pass < 4; ++pass) {
    double value = 0.0;
    const double theta = golden_section_max(
        [&](double t) { return snr_at(t, best_phase); },
        std::max(0.0, best_theta - d_theta), std::min(kPi, best_theta + d_theta),
        value);
    if (value > best) {
      best = value;
      best_theta = std::clamp(theta, 0.0, kPi);
    }
    const double phase = golden_section_max(
        [&](double p) { return snr_at(best_theta, p); }, best_phase - d_phase,
        best_phase + d_phase, value);
    if (value > best) {
      best = value;
      best_phase = wrap_phase(phase);
    }
  }
  return {MeasurementBasis(best_theta, best_phase), best, grid_max};
}

double precision_from_snr(double alpha, std::uint64_t n) {
  if (!(alpha > 0.0)) throw DomainError("accuracy must be positive");
  if (n == 0) throw DomainError("sample budget must be positive");
  return 2.0 * std::atan(alpha / std::sqrt(static_cast<double>(n)));
}

}  // namespace metrotrade
