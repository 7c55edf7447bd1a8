#include "metrotrade/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "metrotrade/errors.hpp"
#include "metrotrade/numeric.hpp"

namespace metrotrade {
namespace {

constexpr double kTieTolerance = 16.0 * std::numeric_limits<double>::epsilon();

}  // namespace

AccuracySpec::AccuracySpec(double alpha, std::uint64_t n,
                           std::optional<Split> split)
    : alpha_(alpha), n_(n), split_(split) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw DomainError("accuracy alpha must be positive and finite");
  }
  if (n == 0) throw DomainError("sample budget must be positive");
  if (split) {
    if (split->particles == 0 || split->repetitions == 0 ||
        split->particles * split->repetitions != n) {
      throw DomainError("resource split must satisfy M * N = n");
    }
  }
}

bool distinguishable_binary(const OutcomeStats& stats0,
                            const OutcomeStats& stats1, double alpha) {
  if (!stats0.is_binary() || !stats1.is_binary()) {
    throw DomainError("binary distinguishability needs two-outcome stats");
  }
  if (stats0.sample_budget() != stats1.sample_budget()) {
    throw DomainError("distinguishability needs equal sample budgets");
  }
  if (!(alpha > 0.0)) throw DomainError("accuracy alpha must be positive");
  const double signal =
      std::fabs(stats1.probabilities()[0] - stats0.probabilities()[0]);
  if (signal == 0.0) return false;
  const double noise = alpha * (stats1.std_devs()[0] + stats0.std_devs()[0]);
  return signal >= noise - kTieTolerance;
}

double critical_fidelity(const AccuracySpec& spec) {
  const double n = static_cast<double>(spec.n());
  return n / (n + spec.alpha() * spec.alpha());
}

BoundReport min_detectable_signal(const AccuracySpec& spec) {
  const double n = static_cast<double>(spec.n());
  const double a2 = spec.alpha() * spec.alpha();
  BoundReport r{};
  r.critical_fidelity = critical_fidelity(spec);
  r.min_signal_exact = std::acos((n - a2) / (n + a2));
  r.min_signal_asymptotic = 2.0 * spec.alpha() / std::sqrt(n);
  r.qcrb = 1.0 / std::sqrt(n);
  r.correction_ratio = r.min_signal_exact / r.qcrb;
  return r;
}

double tradeoff_bound(const AccuracySpec& spec, double fq) {
  if (!(fq > 0.0)) {
    throw NoInformationError("trade-off bound needs positive Fisher information");
  }
  const double n = static_cast<double>(spec.n());
  const double a = spec.alpha();
  return 2.0 * a / (std::sqrt(n + a * a) * std::sqrt(fq));
}

double accuracy_of(double delta_phi, std::uint64_t n, double fq) {
  if (!(delta_phi > 0.0)) throw DomainError("precision must be positive");
  if (!(fq >= 0.0)) throw DomainError("Fisher information must be >= 0");
  return delta_phi * std::sqrt(static_cast<double>(n) * fq) / 2.0;
}

double povm_statistic(const OutcomeStats& stats_initial,
                      const OutcomeStats& stats_final) {
  if (stats_initial.outcomes() != stats_final.outcomes()) {
    throw DomainError("POVM statistic needs equal outcome counts");
  }
  if (stats_initial.sample_budget() != stats_final.sample_budget()) {
    throw DomainError("POVM statistic needs equal sample budgets");
  }
  const auto& p = stats_initial.probabilities();
  const auto& q = stats_final.probabilities();
  CompensatedSum chi2;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double diff = q[i] - p[i];
    if (diff == 0.0) continue;
    if (q[i] == 0.0) return std::numeric_limits<double>::infinity();
    chi2 += diff * diff / q[i];
  }
  return std::sqrt(static_cast<double>(stats_final.sample_budget())) *
         std::sqrt(chi2.value());
}

InherentPrecision inherent_precision(double phi0, std::uint64_t n,
                                     PhaseSide side) {
  if (!(phi0 > 0.0 && phi0 < kPi)) {
    throw DomainError("initial phase must lie in (0, pi)");
  }
  if (n == 0) throw DomainError("sample budget must be positive");
  const double step = 2.0 / static_cast<double>(n);
  const double root_n = std::sqrt(static_cast<double>(n));

  auto one_side = [&](PhaseSide s) {
    const double argument =
        s == PhaseSide::Below ? std::cos(phi0) + step : std::cos(phi0) - step;
    if (!(argument >= -1.0 && argument <= 1.0)) {
      throw UnreachableError("probability step 1/" + std::to_string(n) +
                             " is not reachable from phi0 = " +
                             std::to_string(phi0));
    }
    return s == PhaseSide::Below ? phi0 - std::acos(argument)
                                 : std::acos(argument) - phi0;
  };

  const double delta =
      side == PhaseSide::TwoSided
          ? std::max(one_side(PhaseSide::Below), one_side(PhaseSide::Above))
          : one_side(side);
  return {delta, delta * root_n / 2.0};
}

}  // namespace metrotrade
