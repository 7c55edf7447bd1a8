#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "metrotrade/rng.hpp"
#include "metrotrade/states.hpp"

namespace metrotrade {

/// Largest sample budget accepted by exact binomial enumeration.
inline constexpr std::uint64_t kMaxExactBudget = 64;

/// Outcome distribution of one measurement plus its finite-n projection
/// noise, std_devs[i] = sqrt(p_i (1 - p_i) / n).
class OutcomeStats {
 public:
  OutcomeStats(std::vector<double> probabilities, std::uint64_t sample_budget);

  [[nodiscard]] const std::vector<double>& probabilities() const {
    return probabilities_;
  }
  [[nodiscard]] const std::vector<double>& std_devs() const {
    return std_devs_;
  }
  [[nodiscard]] std::uint64_t sample_budget() const { return budget_; }
  [[nodiscard]] std::size_t outcomes() const { return probabilities_.size(); }
  [[nodiscard]] bool is_binary() const { return probabilities_.size() == 2; }

  /// Projection noise of a single outcome probability at budget n.
  static double projection_noise(double p, std::uint64_t n);

 private:
  std::vector<double> probabilities_;
  std::uint64_t budget_;
  std::vector<double> std_devs_;
};

struct SampleDraw {
  std::vector<std::uint64_t> counts;
  std::uint64_t seed = 0;
  std::uint64_t n = 0;
};

struct PmfEntry {
  std::uint64_t k;
  double probability;
};

OutcomeStats binary_stats(double p, std::uint64_t n);

/// Statistics of the two-outcome POVM {|initial><initial|, 1 - ...} applied
/// to the initial and final probe states: [1, 0] and [F, 1 - F].
std::pair<OutcomeStats, OutcomeStats> povm_stats(const ProbePhaseState& initial,
                                                 const ProbePhaseState& final,
                                                 std::uint64_t n);

/// Exact Binomial(n, p) draw by inversion; consumes one uniform.
std::uint64_t sample_binomial(std::uint64_t n, double p, CounterRng& rng);

/// Multinomial draw via sequential conditional binomials.
std::vector<std::uint64_t> sample_multinomial(
    std::uint64_t n, const std::vector<double>& probabilities,
    CounterRng& rng);

/// Realization `trial` of the stream keyed by `seed`.
SampleDraw draw_sample(const OutcomeStats& stats, std::uint64_t seed,
                       std::uint64_t trial);

std::vector<SampleDraw> draw_samples(const OutcomeStats& stats,
                                     std::uint64_t seed, std::uint64_t trials);

std::vector<PmfEntry> enumerate_binomial(double p, std::uint64_t n);

}  // namespace metrotrade
