#include "metrotrade/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "metrotrade/errors.hpp"
#include "metrotrade/numeric.hpp"

namespace metrotrade {
namespace {

constexpr double kSumTolerance = 1e-12;

// Below this mean the pmf is walked from k = 0; above it the walk starts at
// the mode so the expected cost is O(sqrt(npq)).
constexpr double kSequentialMean = 30.0;

double log_binomial_pmf(std::uint64_t n, std::uint64_t k, double p) {
  const double nd = static_cast<double>(n);
  const double kd = static_cast<double>(k);
  return std::lgamma(nd + 1.0) - std::lgamma(kd + 1.0) -
         std::lgamma(nd - kd + 1.0) + kd * std::log(p) +
         (nd - kd) * std::log1p(-p);
}

// Requires 0 < p <= 1/2.
std::uint64_t binomial_inversion(std::uint64_t n, double p, double u) {
  const double q = 1.0 - p;
  const double ratio = p / q;
  const double nd = static_cast<double>(n);

  if (nd * p < kSequentialMean) {
    double f = std::exp(nd * std::log1p(-p));
    std::uint64_t k = 0;
    while (u > f && k < n) {
      u -= f;
      f *= (nd - static_cast<double>(k)) / static_cast<double>(k + 1) * ratio;
      ++k;
    }
    return k;
  }

  // Chop-down search alternating outward from the mode. Any fixed visiting
  // order realizes the exact distribution.
  const auto mode = std::min<std::uint64_t>(
      n, static_cast<std::uint64_t>(std::floor((nd + 1.0) * p)));
  const double f_mode = std::exp(log_binomial_pmf(n, mode, p));
  u -= f_mode;
  if (u <= 0.0) return mode;

  std::uint64_t hi = mode;
  std::uint64_t lo = mode;
  double f_hi = f_mode;
  double f_lo = f_mode;
  bool hi_open = mode < n;
  bool lo_open = mode > 0;
  while (hi_open || lo_open) {
    if (hi_open) {
      f_hi *= (nd - static_cast<double>(hi)) / static_cast<double>(hi + 1) *
              ratio;
      ++hi;
      u -= f_hi;
      if (u <= 0.0) return hi;
      hi_open = hi < n && f_hi > 0.0;
    }
    if (lo_open) {
      f_lo *= static_cast<double>(lo) /
              (nd - static_cast<double>(lo) + 1.0) / ratio;
      --lo;
      u -= f_lo;
      if (u <= 0.0) return lo;
      lo_open = lo > 0 && f_lo > 0.0;
    }
  }
  // Residual mass lost to rounding.
  return mode;
}

}  // namespace

double OutcomeStats::projection_noise(double p, std::uint64_t n) {
  return std::sqrt(p * (1.0 - p) / static_cast<double>(n));
}

OutcomeStats::OutcomeStats(std::vector<double> probabilities,
                           std::uint64_t sample_budget)
    : probabilities_(std::move(probabilities)), budget_(sample_budget) {
  if (budget_ == 0) throw DomainError("sample budget must be positive");
  if (probabilities_.size() < 2) {
    throw DomainError("a measurement needs at least two outcomes");
  }
  CompensatedSum total;
  for (double p : probabilities_) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw DomainError("outcome probability outside [0, 1]: " +
                        std::to_string(p));
    }
    total += p;
  }
  if (std::fabs(total.value() - 1.0) > kSumTolerance) {
    throw DomainError("outcome probabilities do not sum to 1");
  }
  std_devs_.reserve(probabilities_.size());
  for (double p : probabilities_) {
    std_devs_.push_back(projection_noise(p, budget_));
  }
}

OutcomeStats binary_stats(double p, std::uint64_t n) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw DomainError("binary probability outside [0, 1]");
  }
  if (n == 0) throw DomainError("sample budget must be positive");
  return OutcomeStats({p, 1.0 - p}, n);
}

std::pair<OutcomeStats, OutcomeStats> povm_stats(const ProbePhaseState& initial,
                                                 const ProbePhaseState& final,
                                                 std::uint64_t n) {
  if (initial.kind() != final.kind() ||
      initial.particles() != final.particles() ||
      initial.nonlinear_exponent() != final.nonlinear_exponent()) {
    throw DomainError("POVM statistics need probes of the same family");
  }
  const double f = fidelity(final, initial.phase());
  return {binary_stats(1.0, n), binary_stats(f, n)};
}

std::uint64_t sample_binomial(std::uint64_t n, double p, CounterRng& rng) {
  const double u = rng.uniform();
  if (n == 0 || p <= 0.0) return 0;
  if (p >= 1.0) return n;
  if (p > 0.5) return n - binomial_inversion(n, 1.0 - p, u);
  return binomial_inversion(n, p, u);
}

std::vector<std::uint64_t> sample_multinomial(
    std::uint64_t n, const std::vector<double>& probabilities,
    CounterRng& rng) {
  std::vector<std::uint64_t> counts(probabilities.size(), 0);
  if (counts.empty()) return counts;
  std::uint64_t remaining = n;
  // Remaining mass is recomputed from the tail so it never drifts negative.
  for (std::size_t i = 0; i + 1 < probabilities.size(); ++i) {
    if (remaining == 0) break;
    CompensatedSum tail;
    for (std::size_t j = i; j < probabilities.size(); ++j) {
      tail += probabilities[j];
    }
    const double mass = tail.value();
    const double conditional =
        mass > 0.0 ? std::clamp(probabilities[i] / mass, 0.0, 1.0) : 1.0;
    counts[i] = sample_binomial(remaining, conditional, rng);
    remaining -= counts[i];
  }
  counts.back() += remaining;
  return counts;
}

SampleDraw draw_sample(const OutcomeStats& stats, std::uint64_t seed,
                       std::uint64_t trial) {
  CounterRng rng(seed, trial);
  return {sample_multinomial(stats.sample_budget(), stats.probabilities(), rng),
          seed, stats.sample_budget()};
}

std::vector<SampleDraw> draw_samples(const OutcomeStats& stats,
                                     std::uint64_t seed, std::uint64_t trials) {
  std::vector<SampleDraw> draws;
  draws.reserve(trials);
  for (std::uint64_t t = 0; t < trials; ++t) {
    draws.push_back(draw_sample(stats, seed, t));
  }
  return draws;
}

std::vector<PmfEntry> enumerate_binomial(double p, std::uint64_t n) {
  if (n == 0) throw DomainError("sample budget must be positive");
  if (n > kMaxExactBudget) {
    throw BudgetError("exact enumeration supports n <= " +
                      std::to_string(kMaxExactBudget) + ", got " +
                      std::to_string(n));
  }
  if (!(p >= 0.0 && p <= 1.0)) {
    throw DomainError("binomial probability outside [0, 1]");
  }
  std::vector<PmfEntry> pmf;
  pmf.reserve(n + 1);
  double coefficient = 1.0;
  for (std::uint64_t k = 0; k <= n; ++k) {
    const double kd = static_cast<double>(k);
    const double nd = static_cast<double>(n);
    pmf.push_back({k, coefficient * std::pow(p, kd) *
                          std::pow(1.0 - p, nd - kd)});
    coefficient = coefficient * (nd - kd) / (kd + 1.0);
  }
  return pmf;
}

}  // namespace metrotrade
