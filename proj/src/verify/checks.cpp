#include "metrotrade/verify/checks.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "metrotrade/basis.hpp"
#include "metrotrade/bounds.hpp"
#include "metrotrade/commands.hpp"
#include "metrotrade/errors.hpp"
#include "metrotrade/estimation.hpp"
#include "metrotrade/numeric.hpp"
#include "metrotrade/resources.hpp"
#include "metrotrade/sampling.hpp"
#include "metrotrade/states.hpp"
#include "metrotrade/table.hpp"
#include "metrotrade/verify/oracles.hpp"

namespace metrotrade::verify {
namespace {

constexpr std::size_t kMaxReportedFailures = 3;
constexpr std::array<double, 5> kAlphaGrid{0.25, 0.5, 1.0, 2.0, 4.0};
constexpr std::array<std::uint64_t, 5> kParticleGrid{2, 4, 8, 16, 32};

// Frozen by tests/oracle/reference_values.py (mpmath, 50 digits).
constexpr double kExactBiasPi4N10 = -0.097009403104363581389;
constexpr double kResolutionN100 = 49.9967;
constexpr double kAccuracyN100 = 0.100007;
constexpr double kTanPi20 = 0.15838444032453629384;

std::string fmt(double v) { return format_real(v); }

// i-th of `count` evenly spaced polar angles covering [0, pi].
double polar_angle(int i, int count) {
  return std::min(kPi, kPi * i / static_cast<double>(count - 1));
}

double cell(const Table& table, std::size_t row, std::string_view column) {
  const auto v = parse_real_cell(table.rows().at(row)[table.column(column)]);
  return v ? *v : std::numeric_limits<double>::quiet_NaN();
}

// ---------------------------------------------------------------------------
// Acceptance criteria

void factor_two_correction(CheckContext& ctx) {
  double previous = 0.0;
  for (std::uint64_t n : {100ull, 1000ull, 10000ull, 100000ull}) {
    const double ratio = min_detectable_signal(AccuracySpec(1.0, n)).correction_ratio;
    ctx.at_most("ratio <= 2 at n=" + std::to_string(n), ratio, 2.0);
    ctx.holds("ratio increasing at n=" + std::to_string(n), ratio > previous);
    previous = ratio;
    if (n == 100) ctx.note("arccos(99/101)*sqrt(100)", ratio);
    if (n == 10000) {
      ctx.at_least("ratio >= 1.99 at n=1e4", ratio, 1.99);
      ctx.note("ratio(n=1e4)", ratio);
    }
  }
}

void inherent_heisenberg_point(CheckContext& ctx) {
  constexpr int kGrid = 10000;
  const Table table = cmd_inherent(100, kGrid);
  const std::size_t centre = kGrid / 2 - 1;  // phi0 = pi * 5000 / 10000
  ctx.near("grid contains pi/2", cell(table, centre, "phi0"), kPi / 2, 0.0);
  const double resolution = cell(table, centre, "resolution");
  const double accuracy = cell(table, centre, "accuracy");
  ctx.near_relative("resolution at pi/2", resolution, kResolutionN100, 1e-3);
  ctx.near_relative("accuracy at pi/2", accuracy, kAccuracyN100, 1e-3);
  ctx.note("resolution", resolution);
  ctx.note("accuracy", accuracy);

  std::size_t best_resolution = 0;
  std::size_t worst_accuracy = 0;
  double max_resolution = -1.0;
  double min_accuracy = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < table.rows().size(); ++i) {
    const double r = cell(table, i, "resolution");
    const double a = cell(table, i, "accuracy");
    if (std::isnan(r)) continue;
    if (r > max_resolution) {
      max_resolution = r;
      best_resolution = i;
    }
    if (a < min_accuracy) {
      min_accuracy = a;
      worst_accuracy = i;
    }
  }
  ctx.note("argmax resolution phi0", cell(table, best_resolution, "phi0"));
  ctx.holds("resolution maximum at pi/2", best_resolution == centre);
  ctx.holds("accuracy minimum at pi/2", worst_accuracy == centre);
}

void accuracy_decreases_with_samples(CheckContext& ctx) {
  double previous = std::numeric_limits<double>::infinity();
  for (std::uint64_t n : {10ull, 100ull, 1000ull, 10000ull}) {
    const double a = inherent_precision(kPi / 2, n).accuracy;
    ctx.holds("accuracy strictly decreasing at n=" + std::to_string(n),
              a < previous);
    ctx.note("alpha(n=" + std::to_string(n) + ")", a);
    previous = a;
  }
}

void optimal_basis(CheckContext& ctx) {
  const double phi = kPi / 10;
  const auto r = find_optimal_basis(phi, 1, BasisGrid{400, 400, true});
  ctx.near("refined SNR", r.snr, kTanPi20, 1e-4);
  ctx.near("tan(pi/20) oracle", max_snr(phi, 1), kTanPi20, 1e-15);
  ctx.near("theta", r.best.theta(), kPi / 2, 1e-3);
  ctx.holds("phi_b in optimal set",
            in_optimal_set(r.best.phi_b(), phi, kTwoPi / 400));
  ctx.at_most("grid max <= analytic", r.grid_max, max_snr(phi, 1), 1e-9);
  ctx.at_most("refined <= analytic", r.snr, max_snr(phi, 1), 1e-9);
  ctx.note("snr", r.snr);
  ctx.note("theta", r.best.theta());
  ctx.note("phi_b", r.best.phi_b());
}

void povm_reduction(CheckContext& ctx) {
  double worst = 0.0;
  for (std::uint64_t n = 1; n <= 1000; ++n) {
    for (double alpha : kAlphaGrid) {
      const double f = critical_fidelity(AccuracySpec(alpha, n));
      const double stat =
          povm_statistic(binary_stats(1.0, n), binary_stats(f, n));
      worst = std::max(worst, std::fabs(stat - alpha));
      ctx.near("statistic == alpha", stat, alpha, 1e-12);
    }
  }
  ctx.note("max |statistic - alpha|", worst);
}

void bisection_equivalence(CheckContext& ctx, std::uint64_t max_n) {
  double worst = 0.0;
  for (std::uint64_t n = 1; n <= max_n; ++n) {
    for (double alpha : kAlphaGrid) {
      const double closed = min_detectable_signal(AccuracySpec(alpha, n)).min_signal_exact;
      const double bisected = oracle::bisect_min_signal(n, alpha);
      worst = std::max(worst, std::fabs(closed - bisected));
      ctx.near("closed form vs bisection", closed, bisected, 1e-9);
    }
  }
  ctx.note("max deviation", worst);
}

void bias_structure(CheckContext& ctx) {
  const auto exact = exact_bias_report(kPi / 4, 10);
  ctx.at_most("|bias_p| exact", std::fabs(exact.bias_p), 1e-12);
  ctx.at_least("|bias_phi| above noise floor", std::fabs(exact.bias_phi),
               10.0 * 1e-12);
  ctx.near("bias_phi vs frozen reference", exact.bias_phi, kExactBiasPi4N10,
           1e-12);
  const auto mc = monte_carlo_report(kPi / 4, 10, 1000000, ctx.seed());
  const double se = mc.bias_phi_stderr();
  ctx.near("MC bias_phi within 5 SE", mc.bias_phi, exact.bias_phi, 5.0 * se);
  for (std::uint64_t n : {10ull, 16ull, 64ull}) {
    ctx.at_most("bias_phi(pi/2) vanishes n=" + std::to_string(n),
                std::fabs(exact_bias_report(kPi / 2, n).bias_phi), 1e-12);
  }
  ctx.note("exact bias_phi", exact.bias_phi);
  ctx.note("MC bias_phi", mc.bias_phi);
  ctx.note("MC standard error", se);
}

void resource_scaling(CheckContext& ctx) {
  struct Expectation {
    Strategy strategy;
    double exponent;
    double slope;
    double tolerance;
  };
  for (const auto& e : {Expectation{Strategy::Ensemble, 1.0, -0.5, 0.05},
                        Expectation{Strategy::Product, 1.0, -0.5, 0.05},
                        Expectation{Strategy::GHZ, 1.0, -1.0, 0.05},
                        Expectation{Strategy::Nonlinear, 2.0, -2.0, 0.1}}) {
    const auto report = fit_scaling(e.strategy, kParticleGrid, 100, 1.0, e.exponent);
    ctx.near(std::string(to_string(e.strategy)) + " slope",
             report.fitted_exponent, e.slope, e.tolerance);
    ctx.note(std::string(to_string(e.strategy)), report.fitted_exponent);
  }
}

void noise_amplification(CheckContext& ctx) {
  double last_noise = -1.0;
  double last_bound = std::numeric_limits<double>::infinity();
  for (std::uint64_t m : {1ull, 2ull, 4ull, 8ull}) {
    const StrategyConfig cfg(Strategy::GHZ, m, 100, 1.0);
    const double noise = strategy_signal_noise(cfg, 0.01).noise;
    const double bound = strategy_min_signal(cfg);
    const auto label = " M=" + std::to_string(m);
    ctx.holds("noise increasing" + label, noise > last_noise);
    ctx.holds("min signal decreasing" + label, bound < last_bound);
    last_noise = noise;
    last_bound = bound;
  }
  ctx.note("noise(M=8)", last_noise);
  ctx.note("min_signal(M=8)", last_bound);
}

void fisher_consistency(CheckContext& ctx) {
  CounterRng rng(ctx.seed(), 0xF15E);
  double worst_circle = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double phi = kTwoPi * rng.uniform();
    const double phase = kTwoPi * rng.uniform();
    const double fc =
        classical_fisher_information(MeasurementBasis(kPi / 2, phase), phi);
    worst_circle = std::max(worst_circle, std::fabs(fc - 1.0));
    ctx.near("F_c on theta=pi/2", fc, 1.0, 1e-10);
  }
  const double fq = quantum_fisher_information(GeneratorSpec(0.5));
  ctx.near("F_Q of equatorial qubit", fq, 1.0, 0.0);
  double worst_excess = -1.0;
  for (double phi : {kPi / 10, kPi / 6, 1.0, 2.5}) {
    for (int i = 0; i < 100; ++i) {
      for (int j = 0; j < 100; ++j) {
        const MeasurementBasis basis(polar_angle(i, 100), kTwoPi * j / 100.0);
        const double fc = classical_fisher_information(basis, phi);
        worst_excess = std::max(worst_excess, fc - fq);
        ctx.at_most("F_c <= F_Q", fc, fq, 1e-10);
      }
    }
  }
  const std::array<ProbePhaseState, 4> kinds{
      ProbePhaseState::single(0.0), ProbePhaseState::product(0.0, 3),
      ProbePhaseState::ghz(0.0, 3), ProbePhaseState::nonlinear(0.0, 2, 1.5)};
  for (const auto& state : kinds) {
    const double expected =
        quantum_fisher_information(canonical_generator(state));
    ctx.near_relative(std::string("curvature ") +
                          std::string(to_string(state.kind())),
                      oracle::curvature_fisher(state), expected, 1e-4);
  }
  ctx.note("max |F_c - 1| on circle", worst_circle);
  ctx.note("max F_c - F_Q", worst_excess);
}

std::vector<std::pair<std::string, std::string>> reproducible_outputs(
    std::uint64_t seed) {
  const std::array<std::uint64_t, 4> n_values{1, 10, 100, 1000};
  const std::array<double, 3> alphas{0.5, 1.0, 2.0};
  const std::array<Strategy, 4> strategies{Strategy::Ensemble, Strategy::Product,
                                           Strategy::GHZ, Strategy::Nonlinear};
  std::vector<std::pair<std::string, std::string>> out;
  const auto tradeoff = cmd_tradeoff(n_values, alphas);
  out.emplace_back("tradeoff.csv", tradeoff.to_csv());
  out.emplace_back("tradeoff.svg", render_svg(tradeoff, tradeoff_charts()));
  const auto inherent = cmd_inherent(100, 1000);
  out.emplace_back("inherent.csv", inherent.to_csv());
  out.emplace_back("inherent.svg", render_svg(inherent, inherent_charts()));
  const auto sweep = cmd_basis_sweep(kPi / 10, 1, 60);
  out.emplace_back("basis-sweep.csv", sweep.to_csv());
  out.emplace_back("basis-sweep.svg",
                   render_svg(sweep, basis_sweep_charts(sweep, 60)));
  const auto resources = cmd_resources(strategies, kParticleGrid, 100, 1.0, 2.0);
  out.emplace_back("resources.csv", resources.to_csv());
  out.emplace_back("resources.svg", render_svg(resources, resources_charts()));
  out.emplace_back("bias-mc.csv",
                   cmd_bias_mc(kPi / 4, 10, 20000, seed).to_csv());
  return out;
}

void reproducibility(CheckContext& ctx) {
  const auto first = reproducible_outputs(ctx.seed());
  const auto second = reproducible_outputs(ctx.seed());
  for (std::size_t i = 0; i < first.size(); ++i) {
    ctx.holds(first[i].first + " byte-identical",
              first[i].second == second[i].second);
  }
  ctx.note("outputs compared", static_cast<double>(first.size()));
}

// ---------------------------------------------------------------------------
// Module invariants

void states_invariants(CheckContext& ctx) {
  const std::array<ProbeKind, 4> kinds{ProbeKind::Single, ProbeKind::Product,
                                       ProbeKind::GHZ, ProbeKind::Nonlinear};
  for (int i = 0; i <= 400; ++i) {
    const double delta = -kPi + kTwoPi * i / 400.0;
    const auto single = ProbePhaseState::single(delta);
    const double f1 = fidelity(single, 0.0);
    ctx.holds("Product M=1 == Single",
              fidelity(ProbePhaseState::product(delta, 1), 0.0) == f1);
    ctx.holds("GHZ M=1 == Single",
              fidelity(ProbePhaseState::ghz(delta, 1), 0.0) == f1);
    ctx.holds("Nonlinear M=1,k=1 == Single",
              fidelity(ProbePhaseState::nonlinear(delta, 1, 1.0), 0.0) == f1);
    for (int m : {2, 3, 5}) {
      const double ghz = fidelity(ProbePhaseState::ghz(delta, m), 0.0);
      const double magnified =
          fidelity(ProbePhaseState::single(m * delta), 0.0);
      ctx.near("GHZ(M, d) == Single(M d)", ghz, magnified, 1e-14);
    }
    for (auto kind : kinds) {
      const int m = kind == ProbeKind::Single ? 1 : 4;
      const ProbePhaseState state(kind, delta, m, 1.5);
      const double f = fidelity(state, 0.0);
      ctx.holds("fidelity in [0,1]", f >= 0.0 && f <= 1.0);
      ctx.near("signal + fidelity == 1", signal(state, 0.0) + f, 1.0,
               std::numeric_limits<double>::epsilon());
      ctx.near("fidelity(0) == 1", fidelity(state, state.phase()), 1.0, 0.0);
    }
  }
  for (int m = 1; m <= 6; ++m) {
    for (double delta : {0.1, 0.7, kPi / 2, 2.0}) {
      ctx.near("Product vs statevector",
               fidelity(ProbePhaseState::product(delta, m), 0.0),
               oracle::statevector_product_fidelity(m, delta), 1e-13);
    }
  }
}

void sampling_invariants(CheckContext& ctx) {
  for (double p : {0.0, 0.1, 0.37, 0.5, 0.99, 1.0}) {
    for (std::uint64_t n : {1ull, 7ull, 100ull}) {
      const auto stats = binary_stats(p, n);
      for (std::size_t i = 0; i < 2; ++i) {
        const double q = stats.probabilities()[i];
        ctx.holds("std_dev recomputes exactly",
                  stats.std_devs()[i] == std::sqrt(q * (1.0 - q) / n));
      }
    }
  }
  // Unbiased frequencies.
  for (double p : {0.1, 0.5, 0.8535533905932737}) {
    for (std::uint64_t n : {10ull, 100ull, 1000ull}) {
      constexpr std::uint64_t kTrials = 20000;
      CompensatedSum mean;
      const auto stats = binary_stats(p, n);
      for (std::uint64_t t = 0; t < kTrials; ++t) {
        mean += static_cast<double>(draw_sample(stats, ctx.seed(), t).counts[0]) /
                static_cast<double>(n);
      }
      ctx.near("mean(k/n) -> p", mean.value() / kTrials, p,
               4.0 * std::sqrt(p * (1.0 - p) / (n * kTrials)));
    }
  }
  // Sampler vs exact pmf in total variation.
  for (std::uint64_t n : {1ull, 4ull, 10ull, 16ull}) {
    for (double p : {0.2, 0.5, 0.93}) {
      constexpr std::uint64_t kTrials = 100000;
      std::vector<double> histogram(n + 1, 0.0);
      const auto stats = binary_stats(p, n);
      for (std::uint64_t t = 0; t < kTrials; ++t) {
        histogram[draw_sample(stats, ctx.seed() + 1, t).counts[0]] += 1.0;
      }
      double tv = 0.0;
      for (const auto& [k, w] : enumerate_binomial(p, n)) {
        tv += std::fabs(histogram[k] / kTrials - w);
      }
      ctx.at_most("total variation", 0.5 * tv, 0.01);
    }
  }
  const auto stats = OutcomeStats({0.2, 0.3, 0.5}, 50);
  const auto a = draw_samples(stats, ctx.seed(), 200);
  const auto b = draw_samples(stats, ctx.seed(), 200);
  bool identical = true;
  for (std::size_t i = 0; i < a.size(); ++i) identical &= a[i].counts == b[i].counts;
  ctx.holds("same seed reproduces draws", identical);
}

void estimation_invariants(CheckContext& ctx) {
  for (double phi : {0.3, kPi / 4, 1.2, kPi / 2, 2.4}) {
    for (std::uint64_t n : {1ull, 5ull, 10ull, 32ull, 64ull}) {
      const auto r = exact_bias_report(phi, n);
      ctx.at_most("exact |bias_p|", std::fabs(r.bias_p), 1e-12);
      ctx.near("exact MSE decomposition", r.mse_phi,
               r.var_phi + r.bias_phi * r.bias_phi, 1e-10);
    }
  }
  const auto mc = monte_carlo_report(1.0, 50, 20000, ctx.seed());
  ctx.near("MC MSE decomposition", mc.mse_phi,
           mc.var_phi + mc.bias_phi * mc.bias_phi, 1e-10);

  for (int i = 0; i <= 20; ++i) {
    for (int j = 0; j < 20; ++j) {
      const MeasurementBasis basis(0.05 + 3.0 * i / 20.0, kTwoPi * j / 20.0);
      for (double phi : {0.4, 1.1, 2.2}) {
        const double p = basis_probabilities(basis, phi).p_final;
        if (p < 1e-3 || p > 1.0 - 1e-3) continue;
        ctx.near_relative("F_c vs finite difference",
                          classical_fisher_information(basis, phi),
                          oracle::finite_difference_fisher(basis, phi), 1e-6);
      }
    }
  }

  // Asymptotic unbiasedness trend.
  double previous_bias = std::numeric_limits<double>::infinity();
  double previous_se = 0.0;
  for (std::uint64_t n : {10ull, 100ull, 1000ull, 10000ull}) {
    const auto r = monte_carlo_report(kPi / 4, n, 1000000, ctx.seed() + n);
    const double se = r.bias_phi_stderr();
    ctx.at_most("|bias_phi| non-increasing at n=" + std::to_string(n),
                std::fabs(r.bias_phi), previous_bias, 5.0 * (se + previous_se));
    ctx.note("|bias_phi|(n=" + std::to_string(n) + ")", std::fabs(r.bias_phi));
    previous_bias = std::fabs(r.bias_phi);
    previous_se = se;
  }
}

void bounds_invariants(CheckContext& ctx) {
  bisection_equivalence(ctx, 10000);

  double previous = 0.0;
  for (std::uint64_t n = 1; n <= 10000; ++n) {
    const double ratio = min_detectable_signal(AccuracySpec(1.0, n)).correction_ratio;
    const double nd = static_cast<double>(n);
    ctx.holds("ratio > 2(1 - 1/n)", ratio > 2.0 * (1.0 - 1.0 / nd));
    ctx.at_most("ratio <= 2", ratio, 2.0);
    ctx.holds("ratio increasing", ratio > previous);
    previous = ratio;
  }

  for (std::uint64_t n : {1ull, 3ull, 10ull, 100ull, 1000ull}) {
    for (double alpha : kAlphaGrid) {
      const AccuracySpec spec(alpha, n);
      const double f0 = critical_fidelity(spec);
      for (double f : {0.3, 0.7, 0.95, f0}) {
        const double stat = povm_statistic(binary_stats(1.0, n), binary_stats(f, n));
        ctx.near_relative("POVM reduction sqrt(n(1-F)/F)", stat,
                          std::sqrt(n * (1.0 - f) / f), 1e-12);
      }
      ctx.near("POVM threshold at F0", povm_statistic(binary_stats(1.0, n),
                                                      binary_stats(f0, n)),
               alpha, 1e-12);
      const double product =
          min_detectable_signal(spec).min_signal_asymptotic / alpha;
      ctx.near_relative("trade-off product independent of alpha", product,
                        2.0 / std::sqrt(static_cast<double>(n)), 1e-15);
    }
  }

  // Direction-independent inherent step: minimum located at pi/2.
  constexpr int kGrid = 10000;
  for (std::uint64_t n : {10ull, 100ull, 1000ull}) {
    double best = std::numeric_limits<double>::infinity();
    int best_index = -1;
    for (int i = 1; i < kGrid; ++i) {
      const double phi0 = kPi * (static_cast<double>(i) / kGrid);
      try {
        const double d = inherent_precision(phi0, n, PhaseSide::TwoSided).delta_phi;
        if (d < best) {
          best = d;
          best_index = i;
        }
      } catch (const UnreachableError&) {
      }
    }
    ctx.holds("inherent minimum at pi/2 for n=" + std::to_string(n),
              best_index == kGrid / 2);
  }
  for (double phi0 : {0.6, kPi / 4, 1.2, kPi / 2, 2.0}) {
    ctx.near("inherent closed form vs bisection",
             inherent_precision(phi0, 100).delta_phi,
             oracle::bisect_inherent_step(phi0, 100), 1e-9);
  }
}

void resources_invariants(CheckContext& ctx) {
  for (std::uint64_t m : {1ull, 2ull, 5ull, 10ull}) {
    for (std::uint64_t big_n : {1ull, 10ull, 100ull}) {
      for (double alpha : {0.5, 1.0, 3.0}) {
        ctx.holds("Ensemble(M,N) == Ensemble(1,MN)",
                  strategy_min_signal(StrategyConfig(Strategy::Ensemble, m, big_n, alpha)) ==
                      strategy_min_signal(
                          StrategyConfig(Strategy::Ensemble, 1, m * big_n, alpha)));
      }
    }
  }
  for (std::uint64_t big_n : {1ull, 10ull, 100ull, 1000ull}) {
    const double single =
        min_detectable_signal(AccuracySpec(1.0, big_n)).min_signal_exact;
    for (auto s : {Strategy::Ensemble, Strategy::Product, Strategy::GHZ,
                   Strategy::Nonlinear}) {
      ctx.near("M=1 reduces to the single-qubit bound",
               strategy_min_signal(StrategyConfig(s, 1, big_n, 1.0, 1.0)), single,
               1e-15);
    }
  }
  for (double phi : {0.001, 0.01, 0.03}) {
    for (std::uint64_t m : {1ull, 4ull, 16ull}) {
      const StrategyConfig cfg(Strategy::Product, m, 100, 1.0);
      if (phi > 0.1 / std::sqrt(static_cast<double>(m))) continue;
      ctx.near_relative("Product noise approximation within 10%",
                        product_noise_approximation(cfg, phi),
                        strategy_signal_noise(cfg, phi).noise, 0.1);
    }
  }

  // Monte Carlo confirmation of the strategy bounds.
  constexpr std::uint64_t kRepetitions = 10000;
  std::uint64_t stream = 0;
  for (auto s : {Strategy::Ensemble, Strategy::Product, Strategy::GHZ,
                 Strategy::Nonlinear}) {
    const StrategyConfig cfg(s, 4, 100, 1.0, 2.0);
    const double bound = strategy_min_signal(cfg);
    for (double scale : {1.0, 0.5}) {
      const double phi = scale * bound;
      const double f = fidelity(cfg.probe(phi), 0.0);
      const auto n = cfg.effective_samples();
      const auto initial = binary_stats(1.0, n);
      const auto final_stats = binary_stats(f, n);
      std::uint64_t successes = 0;
      for (std::uint64_t r = 0; r < kRepetitions; ++r) {
        const auto k = draw_sample(final_stats, ctx.seed() + 7, stream++).counts[0];
        const auto observed = binary_stats(static_cast<double>(k) / n, n);
        successes += distinguishable_binary(initial, observed, cfg.alpha());
      }
      const double rate = static_cast<double>(successes) / kRepetitions;
      const double expected = oracle::exact_distinguish_rate(cfg, phi);
      const double sigma = std::sqrt(expected * (1.0 - expected) / kRepetitions);
      const auto label = std::string(to_string(s)) +
                         (scale == 1.0 ? " at bound" : " at half bound");
      ctx.near(label + " rate vs exact", rate, expected, 4.0 * sigma);
      if (scale == 1.0) {
        ctx.at_least(label + " rate >= 0.45", rate, 0.45);
      } else {
        ctx.at_most(label + " rate <= 0.25", rate, 0.25);
      }
      ctx.note(label, rate);
    }
  }
}

void basis_invariants(CheckContext& ctx) {
  for (std::uint64_t n : {1ull, 100ull}) {
    for (int i = 1; i <= 100; ++i) {
      const double phi = kPi * i / 101.0;
      const double analytic = max_snr(phi, n);
      for (double t : {0.0, 0.3, 0.6, 1.0}) {
        // Interior and boundary points of both optimal intervals.
        const double lower = phi + t * (kPi - phi);
        const double upper = phi + kPi + t * (kPi - phi);
        for (double phase : {lower, upper}) {
          ctx.near_relative("SNR on the optimal set",
                            basis_snr(MeasurementBasis(kPi / 2, wrap_phase(phase)), phi, n),
                            analytic, 1e-10);
        }
      }
    }
  }
  for (double phi : {0.05, kPi / 10, 1.0, 2.0, 3.0}) {
    const auto r = find_optimal_basis(phi, 1, BasisGrid{200, 200, false});
    ctx.at_most("grid never exceeds analytic maximum", r.grid_max,
                max_snr(phi, 1), 1e-9);
    for (int i = 0; i < 40; ++i) {
      for (int j = 0; j < 40; ++j) {
        const double theta = polar_angle(i, 40);
        const double phase = kTwoPi * j / 40.0;
        const double mirrored = wrap_phase(phi + kTwoPi - phase);
        ctx.near("SNR reflection symmetry",
                 basis_snr(MeasurementBasis(theta, phase), phi, 3),
                 basis_snr(MeasurementBasis(theta, mirrored), phi, 3), 1e-12);
      }
    }
  }
  for (std::uint64_t n : {1ull, 2ull, 10ull, 100ull, 1000ull, 10000ull}) {
    for (double alpha : kAlphaGrid) {
      ctx.near("2 arctan(a/sqrt n) == arccos((n-a^2)/(n+a^2))",
               precision_from_snr(alpha, n),
               min_detectable_signal(AccuracySpec(alpha, n)).min_signal_exact, 1e-13);
    }
  }
  // Fisher-optimal everywhere on the circle, SNR-optimal only on the set.
  const double phi = kPi / 10;
  double lowest = std::numeric_limits<double>::infinity();
  double highest = 0.0;
  for (int j = 0; j < 100; ++j) {
    const MeasurementBasis basis(kPi / 2, kTwoPi * j / 100.0);
    if (std::fabs(std::sin(phi - basis.phi_b())) < 1e-6) continue;
    ctx.near("F_c = 1 on the circle", classical_fisher_information(basis, phi), 1.0,
             1e-10);
    const double snr = basis_snr(basis, phi, 1);
    lowest = std::min(lowest, snr);
    highest = std::max(highest, snr);
  }
  ctx.holds("SNR varies on the circle", highest - lowest > 0.1);
  ctx.note("SNR range on circle", highest - lowest);
}

void cli_invariants(CheckContext& ctx) {
  const std::array<std::uint64_t, 2> n_values{10, 100};
  const std::array<double, 2> alphas{1.0, 2.0};
  const auto tradeoff = cmd_tradeoff(n_values, alphas);
  const auto csv = tradeoff.to_csv();
  ctx.holds("CSV header row",
            csv.rfind("n,alpha,exact_bound,asymptotic_bound,qcrb,correction_ratio\n", 0) == 0);
  ctx.holds("CSV uses LF only", csv.find('\r') == std::string::npos);
  ctx.holds("17 significant digits", format_real(0.1) == "0.10000000000000001");
  for (const auto& row : tradeoff.rows()) {
    for (std::size_t c = 2; c < row.size(); ++c) {
      const auto v = parse_real_cell(row[c]);
      ctx.holds("numeric cell round-trips", v && format_real(*v) == row[c]);
    }
  }
  // Asymptotic bound is linear in alpha.
  ctx.near_relative("asymptotic bound doubles with alpha", cell(tradeoff, 1, "asymptotic_bound"),
                    2.0 * cell(tradeoff, 0, "asymptotic_bound"), 1e-15);

  struct Rendered {
    std::string name;
    std::string svg;
    int series;
  };
  const auto inherent = cmd_inherent(100, 200);
  const auto sweep = cmd_basis_sweep(kPi / 10, 1, 40);
  const std::array<Strategy, 3> strategies{Strategy::Ensemble, Strategy::Product,
                                           Strategy::GHZ};
  const auto resources = cmd_resources(strategies, kParticleGrid, 100, 1.0, 1.0);
  const std::vector<Rendered> charts{
      {"tradeoff", render_svg(tradeoff, tradeoff_charts()), 2 * 2 + 2},
      {"inherent", render_svg(inherent, inherent_charts()), 2},
      {"basis-sweep", render_svg(sweep, basis_sweep_charts(sweep, 40)), 3},
      {"resources", render_svg(resources, resources_charts()), 3}};
  for (const auto& chart : charts) {
    ctx.near(chart.name + " SVG polylines",
             oracle::svg_polyline_count(chart.svg), chart.series, 0.0);
  }
}

}  // namespace

bool CheckContext::record(bool ok, std::string_view what, std::string message) {
  ++expectations_;
  if (!ok) {
    ++failures_;
    if (failure_messages_.size() < kMaxReportedFailures) {
      failure_messages_.push_back(std::string(what) + ": " + message);
    }
  }
  return ok;
}

double CheckContext::allowance(double tolerance) const {
  return corrupted_ ? -std::numeric_limits<double>::infinity() : tolerance;
}

bool CheckContext::near(std::string_view what, double measured,
                        double expected, double tolerance) {
  const double deviation = std::fabs(measured - expected);
  return record(deviation <= allowance(tolerance), what,
                "measured " + fmt(measured) + ", expected " + fmt(expected) +
                    " +- " + fmt(tolerance));
}

bool CheckContext::near_relative(std::string_view what, double measured,
                                 double expected, double tolerance) {
  const double deviation = std::fabs(measured - expected);
  return record(deviation <= allowance(tolerance * std::fabs(expected)), what,
                "measured " + fmt(measured) + ", expected " + fmt(expected) +
                    " (relative " + fmt(tolerance) + ")");
}

bool CheckContext::at_most(std::string_view what, double value, double bound,
                           double slack) {
  return record(value - bound <= allowance(slack), what,
                "measured " + fmt(value) + ", bound " + fmt(bound) + " + " +
                    fmt(slack));
}

bool CheckContext::at_least(std::string_view what, double value, double bound,
                            double slack) {
  return record(bound - value <= allowance(slack), what,
                "measured " + fmt(value) + ", bound " + fmt(bound) + " - " +
                    fmt(slack));
}

bool CheckContext::holds(std::string_view what, bool condition) {
  return record((condition ? 0.0 : 1.0) <= allowance(0.0), what,
                condition ? "holds, tolerance corrupted" : "violated");
}

void CheckContext::note(std::string_view key, double value) {
  notes_.push_back(std::string(key) + "=" + fmt(value));
}

void CheckContext::note(std::string_view key, std::string_view value) {
  notes_.push_back(std::string(key) + "=" + std::string(value));
}

std::string CheckContext::detail() const {
  std::string out;
  const auto& parts = passed() ? notes_ : failure_messages_;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += "; ";
    out += parts[i];
  }
  if (!passed() && failures_ > failure_messages_.size()) {
    out += "; ... " + std::to_string(failures_ - failure_messages_.size()) +
           " more";
  }
  return out;
}

std::vector<Check> acceptance_checks() {
  return {
      {"AC1", "factor-2 correction to the QCRB", factor_two_correction},
      {"AC2", "inherent precision at the Heisenberg-like point (n=100)",
       inherent_heisenberg_point},
      {"AC3", "accuracy decreases as samples increase",
       accuracy_decreases_with_samples},
      {"AC4", "optimal measurement basis (phi=pi/10, n=1)", optimal_basis},
      {"AC5", "POVM statistic reduces to the critical fidelity", povm_reduction},
      {"AC6", "closed-form bound matches bisection oracle",
       [](CheckContext& ctx) { bisection_equivalence(ctx, 1000); }},
      {"AC7", "bias structure of p_hat and phi_hat", bias_structure},
      {"AC8", "resource scaling exponents", resource_scaling},
      {"AC9", "GHZ noise amplification vs signal enhancement",
       noise_amplification},
      {"AC10", "Fisher information consistency", fisher_consistency},
      {"AC11", "byte-identical CSV/SVG output for identical flags",
       reproducibility},
  };
}

std::vector<Check> invariant_checks() {
  return {
      {"INV-states", "probe fidelity identities", states_invariants},
      {"INV-sampling", "sampling statistics and determinism",
       sampling_invariants},
      {"INV-estimation", "estimator moments and Fisher information",
       estimation_invariants},
      {"INV-bounds", "distinguishability bounds", bounds_invariants},
      {"INV-resources", "resource strategies", resources_invariants},
      {"INV-basis", "measurement-basis SNR landscape", basis_invariants},
      {"INV-cli", "CSV and SVG output contracts", cli_invariants},
  };
}

CheckOutcome run_check(const Check& check, const VerifyOptions& options) {
  const bool corrupted =
      std::find(options.corrupt.begin(), options.corrupt.end(), check.id) !=
      options.corrupt.end();
  CheckContext ctx(options.seed, corrupted);
  try {
    check.body(ctx);
  } catch (const std::exception& e) {
    return {check.id, check.title, false, ctx.expectations(),
            std::string("exception: ") + e.what()};
  }
  return {check.id, check.title, ctx.passed(), ctx.expectations(),
          ctx.detail()};
}

std::vector<CheckOutcome> run_checks(const std::vector<Check>& checks,
                                     const VerifyOptions& options) {
  std::vector<CheckOutcome> outcomes;
  outcomes.reserve(checks.size());
  for (const auto& check : checks) outcomes.push_back(run_check(check, options));
  return outcomes;
}

std::string format_report(const std::vector<CheckOutcome>& outcomes) {
  std::string out;
  std::size_t failed = 0;
  for (const auto& o : outcomes) {
    out += o.passed ? "[PASS] " : "[FAIL] ";
    out += o.id + " " + o.title + " (" + std::to_string(o.expectations) +
           " expectations): " + o.detail + "\n";
    failed += !o.passed;
  }
  out += std::to_string(outcomes.size() - failed) + "/" +
         std::to_string(outcomes.size()) + " checks passed\n";
  return out;
}

bool all_passed(const std::vector<CheckOutcome>& outcomes) {
  return std::all_of(outcomes.begin(), outcomes.end(),
                     [](const CheckOutcome& o) { return o.passed; });
}

std::vector<CheckOutcome> run_verify(const VerifyOptions& options) {
  auto outcomes = run_checks(acceptance_checks(), options);
  auto invariants = run_checks(invariant_checks(), options);
  outcomes.insert(outcomes.end(), invariants.begin(), invariants.end());
  return outcomes;
}

}  // namespace metrotrade::verify
