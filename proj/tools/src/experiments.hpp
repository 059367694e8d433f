// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "config.hpp"
#include "result_table.hpp"

namespace wetbeam::tools {

/// Sweep of the phase-averaged error bound over the training length:
/// uniform-grid value, random-grid average, and the 2 sigma^2/(N beta^2)
/// reference curve.
ResultTable cmd_mcrlb_sweep(const Config& cfg);

/// Scatter of the per-phase bound for random training grids and random true
/// phases, against the uniform-grid averaged bound.
ResultTable cmd_crlb_scatter(const Config& cfg);

/// Monte Carlo RMSE of the resolved phase estimate versus training length,
/// one row per (SNR, N) cell.
ResultTable cmd_rmse_sweep(const Config& cfg);

/// Per-trial harvested energy of the trained beam versus the perfect-CSI
/// beam and the full-CSI grid baseline, as empirical CDFs per SNR.
ResultTable cmd_energy_cdf(const Config& cfg);

/// Empirical CDF of the harvest-optimal training length over random
/// channels (two-antenna transmitter).
ResultTable cmd_nstar_cdf(const Config& cfg);

/// Offline estimation of a recorded feedback trace.
ResultTable cmd_replay(const Config& cfg);

/// Prints the uniform training phase set for a given N.
ResultTable cmd_theta(const Config& cfg);

/// Dispatch by subcommand name; throws ConfigError for unknown names.
ResultTable run_experiment(const std::string& name, const Config& cfg);

/// Names accepted by run_experiment.
std::vector<std::string> experiment_names();

}  // namespace wetbeam::tools
