#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "metrotrade/bounds.hpp"
#include "metrotrade/resources.hpp"
#include "metrotrade/table.hpp"

namespace metrotrade {

/// Trade-off surface: one row per (n, alpha), n-major.
/// Columns: n, alpha, exact_bound, asymptotic_bound, qcrb, correction_ratio.
Table cmd_tradeoff(std::span<const std::uint64_t> n_values,
                   std::span<const double> alphas);
std::vector<ChartPanel> tradeoff_charts();

/// Inherent precision over phi0 = pi i / grid, i = 1 .. grid - 1, using the
/// direction-independent step by default.
/// Columns: phi0, resolution, accuracy, status ("ok" or "unreachable").
Table cmd_inherent(std::uint64_t n, int grid,
                   PhaseSide side = PhaseSide::TwoSided);
std::vector<ChartPanel> inherent_charts();

/// SNR landscape on a grid x grid mesh of (theta, phi_b) followed by summary
/// rows. Columns: row ("grid", "grid_max", "refined_max", "analytic_max"),
/// theta, phi_b, snr.
Table cmd_basis_sweep(double phi, std::uint64_t n, int grid);
std::vector<ChartPanel> basis_sweep_charts(const Table& sweep, int grid);

/// Columns: strategy, M, N, min_signal, fitted_exponent.
Table cmd_resources(std::span<const Strategy> strategies,
                    std::span<const std::uint64_t> particle_grid,
                    std::uint64_t repetitions, double alpha,
                    double nonlinear_exponent);
std::vector<ChartPanel> resources_charts();

/// Columns: mode, mean_p, bias_p, mean_phi, bias_phi, var_phi, mse_phi.
/// The ExactEnumeration row is present when n <= 64.
Table cmd_bias_mc(double phi, std::uint64_t n, std::uint64_t trials,
                  std::uint64_t seed);

}  // namespace metrotrade
