#pragma once

#include <cstdint>

namespace metrotrade {

/// Binary projective measurement onto
/// |M> = cos(theta/2)|0> + sin(theta/2) e^{i phi_b}|1> and its complement.
class MeasurementBasis {
 public:
  MeasurementBasis(double theta, double phi_b);

  [[nodiscard]] double theta() const { return theta_; }
  [[nodiscard]] double phi_b() const { return phi_b_; }

 private:
  double theta_;
  double phi_b_;
};

struct BasisProbabilities {
  double p_initial;
  double p_final;
};

/// Probabilities of the |M> outcome for the equatorial probe before and after
/// the phase `phi`.
BasisProbabilities basis_probabilities(const MeasurementBasis& basis,
                                       double phi);

/// Probability signal over summed projection noise at sample budget n.
/// Returns 0 when both outcomes are deterministic and equal, +inf when they
/// are deterministic and different.
double basis_snr(const MeasurementBasis& basis, double phi, std::uint64_t n);

struct BasisGrid {
  int theta_points = 400;
  int phase_points = 400;
  bool refine = true;
};

struct OptimalBasis {
  MeasurementBasis best;
  double snr;       // after refinement
  double grid_max;  // best raw grid value
};

/// Coarse grid over theta in [0, pi] and phi_b in [0, 2pi), followed by
/// alternating golden-section refinement around the best cell.
OptimalBasis find_optimal_basis(double phi, std::uint64_t n,
                                const BasisGrid& grid = {});

/// Analytic optimum sqrt(n) |tan(phi/2)|.
double max_snr(double phi, std::uint64_t n);

/// True iff phi_b lies in [phi, pi] U [phi + pi, 2pi] (modulo 2pi), within
/// `tolerance` of the set.
bool in_optimal_set(double phi_b, double phi, double tolerance = 0.0);

/// Phase resolvable at accuracy alpha when the optimal SNR is required to
/// reach alpha: 2 arctan(alpha / sqrt(n)).
double precision_from_snr(double alpha, std::uint64_t n);

}  // namespace metrotrade
