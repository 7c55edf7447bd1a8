#include "metrotrade/commands.hpp"

#include <cmath>

#include "metrotrade/basis.hpp"
#include "metrotrade/errors.hpp"
#include "metrotrade/estimation.hpp"
#include "metrotrade/numeric.hpp"
#include "metrotrade/sampling.hpp"

namespace metrotrade {

Table cmd_tradeoff(std::span<const std::uint64_t> n_values,
                   std::span<const double> alphas) {
  if (n_values.empty() || alphas.empty()) {
    throw DomainError("trade-off sweep needs at least one n and one alpha");
  }
  Table table({"n", "alpha", "exact_bound", "asymptotic_bound", "qcrb",
               "correction_ratio"});
  for (auto n : n_values) {
    for (double alpha : alphas) {
      const auto r = min_detectable_signal(AccuracySpec(alpha, n));
      table.row()
          .add(n)
          .add(alpha)
          .add(r.min_signal_exact)
          .add(r.min_signal_asymptotic)
          .add(r.qcrb)
          .add(r.correction_ratio);
    }
  }
  return table;
}

std::vector<ChartPanel> tradeoff_charts() {
  ChartPanel bound;
  bound.title = "Minimum detectable phase";
  bound.x_column = "n";
  bound.y_columns = {"exact_bound", "qcrb"};
  bound.group_column = "alpha";
  bound.log_x = true;
  bound.log_y = true;
  ChartPanel ratio;
  ratio.title = "Exact bound / QCRB";
  ratio.x_column = "n";
  ratio.y_columns = {"correction_ratio"};
  ratio.group_column = "alpha";
  ratio.log_x = true;
  return {bound, ratio};
}

Table cmd_inherent(std::uint64_t n, int grid, PhaseSide side) {
  if (n < 3) throw DomainError("inherent-precision sweep needs n >= 3");
  if (grid < 2) throw DomainError("phase grid needs at least two intervals");
  Table table({"phi0", "resolution", "accuracy", "status"});
  for (int i = 1; i < grid; ++i) {
    const double phi0 =
        kPi * (static_cast<double>(i) / static_cast<double>(grid));
    try {
      const auto r = inherent_precision(phi0, n, side);
      table.row().add(phi0).add(1.0 / r.delta_phi).add(r.accuracy).add("ok");
    } catch (const UnreachableError&) {
      table.row().add(phi0).empty().empty().add("unreachable");
    }
  }
  return table;
}

std::vector<ChartPanel> inherent_charts() {
  ChartPanel resolution;
  resolution.title = "Resolution 1/delta_phi";
  resolution.x_column = "phi0";
  resolution.y_columns = {"resolution"};
  ChartPanel accuracy;
  accuracy.title = "Accuracy alpha";
  accuracy.x_column = "phi0";
  accuracy.y_columns = {"accuracy"};
  return {resolution, accuracy};
}

Table cmd_basis_sweep(double phi, std::uint64_t n, int grid) {
  if (grid < 2) throw DomainError("basis grid needs at least two points");
  if (n == 0) throw DomainError("sample budget must be positive");
  Table table({"row", "theta", "phi_b", "snr"});
  const BasisGrid spec{grid, grid, true};
  double best = -1.0;
  double best_theta = 0.0;
  double best_phase = 0.0;
  for (int i = 0; i < grid; ++i) {
    const double theta =
        i == grid - 1 ? kPi : kPi * static_cast<double>(i) / (grid - 1);
    for (int j = 0; j < grid; ++j) {
      const double phase = kTwoPi * static_cast<double>(j) / grid;
      const double snr = basis_snr(MeasurementBasis(theta, phase), phi, n);
      if (snr > best) {
        best = snr;
        best_theta = theta;
        best_phase = phase;
      }
      table.row().add("grid").add(theta).add(phase).add(snr);
    }
  }
  table.row().add("grid_max").add(best_theta).add(best_phase).add(best);
  const auto refined = find_optimal_basis(phi, n, spec);
  table.row()
      .add("refined_max")
      .add(refined.best.theta())
      .add(refined.best.phi_b())
      .add(refined.snr);
  table.row()
      .add("analytic_max")
      .add(kPi / 2)
      .add(wrap_phase(phi))
      .add(max_snr(phi, n));
  return table;
}

std::vector<ChartPanel> basis_sweep_charts(const Table& sweep, int grid) {
  // One panel per selected polar angle, taken from the written theta cells so
  // the chart uses exactly the CSV values.
  const auto theta_col = sweep.column("theta");
  std::vector<ChartPanel> panels;
  for (int i : {grid / 4, (grid - 1) / 2, grid / 2}) {
    const auto row = static_cast<std::size_t>(i) * static_cast<std::size_t>(grid);
    if (row >= sweep.rows().size()) continue;
    const auto& theta_cell = sweep.rows()[row][theta_col];
    bool duplicate = false;
    for (const auto& p : panels) duplicate |= p.filter_value == theta_cell;
    if (duplicate) continue;
    ChartPanel panel;
    panel.title = "SNR vs phi_b at theta = " + theta_cell;
    panel.x_column = "phi_b";
    panel.y_columns = {"snr"};
    panel.filter_column = "theta";
    panel.filter_value = theta_cell;
    panels.push_back(panel);
  }
  return panels;
}

Table cmd_resources(std::span<const Strategy> strategies,
                    std::span<const std::uint64_t> particle_grid,
                    std::uint64_t repetitions, double alpha,
                    double nonlinear_exponent) {
  if (strategies.empty()) throw DomainError("no strategies selected");
  Table table({"strategy", "M", "N", "min_signal", "fitted_exponent"});
  for (auto strategy : strategies) {
    const auto report = fit_scaling(strategy, particle_grid, repetitions, alpha,
                                    nonlinear_exponent);
    for (std::size_t i = 0; i < report.resources.size(); ++i) {
      table.row()
          .add(to_string(strategy))
          .add(report.resources[i])
          .add(repetitions)
          .add(report.phis[i])
          .add(report.fitted_exponent);
    }
  }
  return table;
}

std::vector<ChartPanel> resources_charts() {
  ChartPanel panel;
  panel.title = "Minimum detectable phase vs M";
  panel.x_column = "M";
  panel.y_columns = {"min_signal"};
  panel.group_column = "strategy";
  panel.log_x = true;
  panel.log_y = true;
  return {panel};
}

Table cmd_bias_mc(double phi, std::uint64_t n, std::uint64_t trials,
                  std::uint64_t seed) {
  Table table({"mode", "mean_p", "bias_p", "mean_phi", "bias_phi", "var_phi",
               "mse_phi"});
  auto emit = [&table](const EstimatorReport& r) {
    table.row()
        .add(to_string(r.mode))
        .add(r.mean_p_hat)
        .add(r.bias_p)
        .add(r.mean_phi_hat)
        .add(r.bias_phi)
        .add(r.var_phi)
        .add(r.mse_phi);
  };
  if (n <= kMaxExactBudget) emit(exact_bias_report(phi, n));
  emit(monte_carlo_report(phi, n, trials, seed));
  return table;
}

}  // namespace metrotrade
