#pragma once

#include <cstdint>
#include <optional>

#include "metrotrade/sampling.hpp"

namespace metrotrade {

/// Accuracy alpha demanded of a distinguishability decision with sample
/// budget n, optionally split as n = M * N.
class AccuracySpec {
 public:
  struct Split {
    std::uint64_t particles;
    std::uint64_t repetitions;
  };

  AccuracySpec(double alpha, std::uint64_t n,
               std::optional<Split> split = std::nullopt);

  [[nodiscard]] double alpha() const { return alpha_; }
  [[nodiscard]] std::uint64_t n() const { return n_; }
  [[nodiscard]] const std::optional<Split>& split() const { return split_; }

 private:
  double alpha_;
  std::uint64_t n_;
  std::optional<Split> split_;
};

struct BoundReport {
  double critical_fidelity;
  double min_signal_exact;       // arccos((n - a^2)/(n + a^2))
  double min_signal_asymptotic;  // 2 a / sqrt(n)
  double qcrb;                   // 1 / sqrt(n F_Q), F_Q = 1
  double correction_ratio;       // exact / qcrb
};

/// |p1 - p0| >= alpha (dp1 + dp0) on the first outcome of two binary
/// measurements with the same budget. Ties are resolved within 16 ulp of the
/// unit probability scale; a zero signal is never distinguishable.
bool distinguishable_binary(const OutcomeStats& stats0,
                            const OutcomeStats& stats1, double alpha);

/// Largest fidelity still distinguishable: n / (n + alpha^2).
double critical_fidelity(const AccuracySpec& spec);

BoundReport min_detectable_signal(const AccuracySpec& spec);

/// Precision-accuracy trade-off 2 alpha / (sqrt(n + alpha^2) sqrt(F_Q)).
double tradeoff_bound(const AccuracySpec& spec, double fq);

/// Accuracy implied by a built-in precision: delta_phi sqrt(n F_Q) / 2.
double accuracy_of(double delta_phi, std::uint64_t n, double fq = 1.0);

/// sqrt(n) sqrt(sum_i (p'_i - p_i)^2 / p'_i) with p from `stats_initial` and p'
/// from `stats_final`. A cell with p'_i = 0 and p_i != 0 gives +inf.
double povm_statistic(const OutcomeStats& stats_initial,
                      const OutcomeStats& stats_final);

/// Which side of phi0 the inherent-precision step is taken on. TwoSided is
/// the larger of the two steps, i.e. the step resolvable whichever way the
/// phase moves; it coincides with Below for phi0 <= pi/2.
enum class PhaseSide { Below, Above, TwoSided };

struct InherentPrecision {
  double delta_phi;
  double accuracy;
};

/// Smallest phase step that moves the Ramsey probability by the frequency
/// quantum 1/n. Below: phi0 - arccos(2/n + cos phi0). Above:
/// arccos(cos phi0 - 2/n) - phi0. Throws UnreachableError when the arccos
/// argument leaves [-1, 1] (on either side, for TwoSided).
InherentPrecision inherent_precision(double phi0, std::uint64_t n,
                                     PhaseSide side = PhaseSide::Below);

}  // namespace metrotrade
