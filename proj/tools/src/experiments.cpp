// SPDX-License-Identifier: Apache-2.0
#include "experiments.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <stdexcept>

#include "parallel.hpp"
#include "wetbeam/angles.hpp"
#include "wetbeam/beam.hpp"
#include "wetbeam/channel.hpp"
#include "wetbeam/codebook.hpp"
#include "wetbeam/crlb.hpp"
#include "wetbeam/errors.hpp"
#include "wetbeam/estimator.hpp"
#include "wetbeam/format.hpp"
#include "wetbeam/planner.hpp"
#include "wetbeam/rng.hpp"
#include "wetbeam/rssi_sim.hpp"
#include "wetbeam/trace.hpp"
#include "wetbeam/version.hpp"

namespace wetbeam::tools {
namespace {

// Stream ids keying the counter-based generator; each purpose gets its own
// key space so adding draws to one path never shifts another.
constexpr std::uint32_t kNoiseStream = 1;
constexpr std::uint32_t kChannelStream = 2;
constexpr std::uint32_t kThetaStream = 3;

constexpr const char* kConventionRatio = "beta_sq_over_sigma_sq";
constexpr const char* kConventionHalfRatio = "beta_sq_over_two_sigma_sq";

double sigma2_from_snr(double snr_db, const std::string& convention,
                       double beta_nominal) {
  const double lin = std::pow(10.0, snr_db / 10.0);
  const double b2 = beta_nominal * beta_nominal;
  if (convention == kConventionRatio) {
    return b2 / lin;
  }
  if (convention == kConventionHalfRatio) {
    return b2 / (2.0 * lin);
  }
  throw ConfigError("snr_convention must be '" + std::string(kConventionRatio) +
                    "' or '" + std::string(kConventionHalfRatio) + "'");
}

std::vector<std::string> provenance(const std::string& experiment,
                                    const ConfigReader& reader) {
  std::vector<std::string> lines;
  lines.push_back(kVersion);
  lines.push_back("experiment=" + experiment);
  std::string echo = "config:";
  for (const std::string& kv : reader.echo()) {
    echo += " " + kv;
  }
  lines.push_back(echo);
  lines.push_back(
      "format: UTF-8, LF rows, '.' decimal separator, up to 17 significant digits "
      "(round-trip exact)");
  return lines;
}

ChannelModel channel_from_config(ConfigReader& reader) {
  return ChannelModel::parse(reader.get_string("channel", "unit-magnitude-uniform-phase"));
}

PhaseSet draw_distinct_phase_set(std::size_t n, RngStream& stream) {
  for (int attempt = 0; attempt < 100; ++attempt) {
    PhaseSet set = random_phase_set(n, stream);
    if (!set.has_repeated_phase()) {
      return set;
    }
  }
  throw std::runtime_error("random phase sets kept colliding; check the generator");
}

}  // namespace

ResultTable cmd_mcrlb_sweep(const Config& cfg) {
  ConfigReader reader(cfg);
  const std::uint64_t seed = reader.require_u64("seed");
  const std::size_t trials = reader.get_size("trials", 1000);
  const std::size_t n_min = reader.get_size("n_min", 3);
  const std::size_t n_max = reader.get_size("n_max", 16);
  const double beta = reader.get_double("beta", 1.0);
  const double sigma2 = reader.get_double("sigma2", 1.0);
  const std::size_t workers = reader.get_execution_size("workers", default_workers());
  reader.declare("out");
  reader.finish();
  if (trials < 1 || n_min < 3 || n_max < n_min) {
    throw ConfigError("mcrlb-sweep: need trials >= 1 and 3 <= n_min <= n_max");
  }

  const std::size_t n_rows = n_max - n_min + 1;
  std::vector<std::vector<double>> rows(n_rows);
  parallel_for(n_rows, workers, [&](std::size_t row) {
    const std::size_t n = n_min + row;
    const double uniform_value = mcrlb(make_theta(n), beta, sigma2);
    double sum = 0.0;
    for (std::size_t i = 0; i < trials; ++i) {
      RngStream stream(seed, kThetaStream, (static_cast<std::uint64_t>(n) << 32) | i);
      sum += mcrlb(draw_distinct_phase_set(n, stream), beta, sigma2);
    }
    const double reference = 2.0 * sigma2 / (static_cast<double>(n) * beta * beta);
    rows[row] = {static_cast<double>(n), uniform_value,
                 sum / static_cast<double>(trials), reference};
  });

  ResultTable table;
  table.provenance = provenance("mcrlb-sweep", reader);
  table.columns = {"n", "mcrlb_def1", "mcrlb_random_mean", "two_over_n"};
  for (auto& row : rows) {
    table.append_row(std::move(row));
  }
  return table;
}

ResultTable cmd_crlb_scatter(const Config& cfg) {
  ConfigReader reader(cfg);
  const std::uint64_t seed = reader.require_u64("seed");
  const std::size_t trials = reader.get_size("trials", 1500);
  const std::size_t n = reader.get_size("n", 4);
  const double beta = reader.get_double("beta", 1.0);
  const double sigma2 = reader.get_double("sigma2", 1.0);
  const std::size_t workers = reader.get_execution_size("workers", default_workers());
  reader.declare("out");
  reader.finish();
  if (trials < 1 || n < 3) {
    throw ConfigError("crlb-scatter: need trials >= 1 and n >= 3");
  }

  const double uniform_value = mcrlb(make_theta(n), beta, sigma2);
  std::vector<double> values(trials);
  parallel_for(trials, workers, [&](std::size_t i) {
    RngStream stream(seed, kThetaStream, i);
    const PhaseSet thetas = draw_distinct_phase_set(n, stream);
    const double phi = kTwoPi * stream.next_uniform();
    values[i] = crlb_phi(PairParams{beta, beta, wrap_angle(phi)}, thetas, sigma2);
  });

  ResultTable table;
  table.provenance = provenance("crlb-scatter", reader);
  table.columns = {"realization", "crlb", "mcrlb_def1"};
  for (std::size_t i = 0; i < trials; ++i) {
    table.append_row({static_cast<double>(i + 1), values[i], uniform_value});
  }
  return table;
}

ResultTable cmd_rmse_sweep(const Config& cfg) {
  ConfigReader reader(cfg);
  const std::uint64_t seed = reader.require_u64("seed");
  const std::size_t trials = reader.get_size("trials", 10000);
  const std::size_t n_min = reader.get_size("n_min", 3);
  const std::size_t n_max = reader.get_size("n_max", 16);
  const std::vector<double> snrs = reader.get_double_list("snr_db", {0.0, 10.0, 20.0});
  const std::string convention =
      reader.get_string("snr_convention", kConventionRatio);
  const std::size_t antennas = reader.get_size("k", 2);
  const double xi = reader.get_double("xi", 1.0);
  const double power = reader.get_double("power", 2.0);
  const ChannelModel model = channel_from_config(reader);
  const std::size_t workers = reader.get_execution_size("workers", default_workers());
  reader.declare("out");
  reader.finish();
  if (trials < 1 || n_min < 3 || n_max < n_min || antennas < 2) {
    throw ConfigError("rmse-sweep: need trials >= 1, 3 <= n_min <= n_max, k >= 2");
  }

  const SystemParams sys(xi, power);
  const double beta_nominal = xi * power / 2.0;

  struct Cell {
    double snr_db;
    std::size_t n;
  };
  std::vector<Cell> cells;
  for (const double snr : snrs) {
    for (std::size_t n = n_min; n <= n_max; ++n) {
      cells.push_back({snr, n});
    }
  }

  std::vector<std::vector<double>> rows(cells.size());
  parallel_for(cells.size(), workers, [&](std::size_t c) {
    const Cell cell = cells[c];
    const NoiseModel noise{sigma2_from_snr(cell.snr_db, convention, beta_nominal)};
    const PhaseSet thetas = make_theta(cell.n);
    double m2 = 0.0;
    double m4 = 0.0;
    const std::size_t n_errors = trials * (antennas - 1);
    for (std::size_t t = 0; t < trials; ++t) {
      RngStream channel_stream(seed, kChannelStream, t);
      const ChannelVector h = sample_channel(model, antennas, channel_stream);
      const RngStream noise_stream(seed, kNoiseStream, t);
      const TrainingTable table = run_training(h, thetas, sys, noise, noise_stream);
      const EstimateSet estimates = estimate_all_phases(table);
      for (std::size_t k = 2; k <= antennas; ++k) {
        const double truth = derive_pair_params(h.gain(0), h.gain(k - 1), sys).phi;
        const double err = wrap_angle(estimates.phases[k - 2] - truth);
        m2 += err * err;
        m4 += err * err * err * err;
      }
    }
    m2 /= static_cast<double>(n_errors);
    m4 /= static_cast<double>(n_errors);
    const double rmse = std::sqrt(m2);
    // Delta method for the standard error of an RMSE.
    const double var_m2 =
        std::max(0.0, m4 - m2 * m2) / static_cast<double>(n_errors);
    const double se = rmse > 0.0 ? std::sqrt(var_m2) / (2.0 * rmse) : 0.0;
    const double bound = std::sqrt(2.0 * noise.sigma2 /
                                   (static_cast<double>(cell.n) * beta_nominal *
                                    beta_nominal));
    rows[c] = {cell.snr_db,       static_cast<double>(cell.n),
               static_cast<double>(trials), rad_to_deg(rmse),
               rad_to_deg(se),    rad_to_deg(bound)};
  });

  ResultTable table;
  table.provenance = provenance("rmse-sweep", reader);
  table.provenance.push_back(
      convention == kConventionRatio
          ? "snr definition: snr_db = 10 log10(beta^2 / sigma^2), beta = xi power / 2"
          : "snr definition: snr_db = 10 log10(beta^2 / (2 sigma^2)), beta = xi power / 2");
  table.columns = {"snr_db", "n", "trials", "rmse_deg", "se_deg", "mcrlb_rmse_deg"};
  for (auto& row : rows) {
    table.append_row(std::move(row));
  }
  return table;
}

ResultTable cmd_energy_cdf(const Config& cfg) {
  ConfigReader reader(cfg);
  const std::uint64_t seed = reader.require_u64("seed");
  const std::size_t trials = reader.get_size("trials", 1500);
  const std::size_t n = reader.get_size("n", 4);
  const std::vector<double> snrs = reader.get_double_list("snr_db", {10.0, 20.0});
  const std::string convention =
      reader.get_string("snr_convention", kConventionRatio);
  const std::size_t antennas = reader.get_size("k", 2);
  const double xi = reader.get_double("xi", 1.0);
  const double power = reader.get_double("power", 2.0);
  const double grid_step = reader.get_double("grid_step", kTwoPi / 360.0);
  const ChannelModel model = channel_from_config(reader);
  const std::size_t workers = reader.get_execution_size("workers", default_workers());
  reader.declare("out");
  reader.finish();
  if (trials < 1 || n < 3 || antennas < 2) {
    throw ConfigError("energy-cdf: need trials >= 1, n >= 3, k >= 2");
  }

  const SystemParams sys(xi, power);
  const double beta_nominal = xi * power / 2.0;
  const PhaseSet thetas = make_theta(n);

  struct Sample {
    std::size_t trial;
    double energy;
    double energy_perfect;
    double energy_baseline;
  };
  std::vector<std::vector<Sample>> groups(snrs.size(),
                                          std::vector<Sample>(trials));
  parallel_for(snrs.size() * trials, workers, [&](std::size_t idx) {
    const std::size_t g = idx / trials;
    const std::size_t t = idx % trials;
    const NoiseModel noise{sigma2_from_snr(snrs[g], convention, beta_nominal)};

    RngStream channel_stream(seed, kChannelStream, t);
    const ChannelVector h = sample_channel(model, antennas, channel_stream);

    std::vector<double> truth;
    truth.reserve(antennas - 1);
    for (std::size_t k = 2; k <= antennas; ++k) {
      truth.push_back(derive_pair_params(h.gain(0), h.gain(k - 1), sys).phi);
    }

    const RngStream noise_stream(seed, kNoiseStream, t);
    const TrainingTable table = run_training(h, thetas, sys, noise, noise_stream);
    const EstimateSet estimates = estimate_all_phases(table);
    const EstimateSet baseline = exhaustive_baseline(h, sys, grid_step);

    groups[g][t] = Sample{
        t,
        received_energy(h, egt_beam_vector(estimates.phases, sys), xi),
        received_energy(h, egt_beam_vector(truth, sys), xi),
        received_energy(h, egt_beam_vector(baseline.phases, sys), xi),
    };
  });

  ResultTable table;
  table.provenance = provenance("energy-cdf", reader);
  table.columns = {"snr_db",          "trial",
                   "energy",          "energy_perfect",
                   "energy_baseline", "loss_pct_vs_perfect",
                   "loss_pct_vs_baseline", "cdf"};
  for (std::size_t g = 0; g < snrs.size(); ++g) {
    std::vector<Sample>& samples = groups[g];
    std::sort(samples.begin(), samples.end(), [](const Sample& a, const Sample& b) {
      return a.energy != b.energy ? a.energy < b.energy : a.trial < b.trial;
    });
    for (std::size_t i = 0; i < samples.size(); ++i) {
      const Sample& s = samples[i];
      const double loss_perfect =
          s.energy_perfect > 0.0 ? 100.0 * (1.0 - s.energy / s.energy_perfect) : 0.0;
      const double loss_baseline =
          s.energy_baseline > 0.0 ? 100.0 * (1.0 - s.energy / s.energy_baseline) : 0.0;
      table.append_row({snrs[g], static_cast<double>(s.trial), s.energy,
                        s.energy_perfect, s.energy_baseline, loss_perfect,
                        loss_baseline,
                        static_cast<double>(i + 1) / static_cast<double>(trials)});
    }
  }
  return table;
}

ResultTable cmd_nstar_cdf(const Config& cfg) {
  ConfigReader reader(cfg);
  const std::uint64_t seed = reader.require_u64("seed");
  const std::size_t trials = reader.get_size("trials", 10000);
  const std::size_t antennas = reader.get_size("k", 2);
  const double tau = reader.get_double("tau", 1.0);
  const double t_block = reader.get_double("t_block", 100.0 * tau);
  const double e_f = reader.get_double("e_f", 0.05);
  const std::vector<double> snrs = reader.get_double_list("snr_db", {0.0, 5.0, 10.0});
  const std::string convention =
      reader.get_string("snr_convention", kConventionRatio);
  const double xi = reader.get_double("xi", 1.0);
  const double power = reader.get_double("power", 2.0);
  const std::size_t max_resample = reader.get_size("max_resample", 1000);
  const ChannelModel model = ChannelModel::parse(reader.get_string("channel", "rayleigh"));
  const std::size_t workers = reader.get_execution_size("workers", default_workers());
  reader.declare("out");
  reader.finish();
  if (antennas != 2) {
    throw ConfigError("nstar-cdf: only k=2 is supported (pairwise omega model)");
  }
  if (trials < 1) {
    throw ConfigError("nstar-cdf: need trials >= 1");
  }

  const SystemParams sys(xi, power);
  const double beta_nominal = xi * power / 2.0;
  const TimingParams timing{t_block, tau, e_f, antennas};

  struct Sample {
    std::size_t trial;
    double brute;
    double analytic;
    double clamped;
  };
  std::vector<std::vector<Sample>> groups(snrs.size(),
                                          std::vector<Sample>(trials));
  parallel_for(snrs.size() * trials, workers, [&](std::size_t idx) {
    const std::size_t g = idx / trials;
    const std::size_t t = idx % trials;
    const double sigma2 = sigma2_from_snr(snrs[g], convention, beta_nominal);
    const double sigma = std::sqrt(sigma2);

    RngStream channel_stream(seed, kChannelStream, t);
    // Draw channels until the block can actually harvest at N = 3; deep
    // double fades make the estimation penalty unbounded.
    for (std::size_t attempt = 0;; ++attempt) {
      if (attempt >= max_resample) {
        throw std::runtime_error(
            "nstar-cdf: could not draw a feasible channel (raise t_block or snr)");
      }
      const ChannelVector h = sample_channel(model, 2, channel_stream);
      const PairParams pair = derive_pair_params(h.gain(0), h.gain(1), sys);
      if (!(pair.beta > 0.0)) {
        continue;
      }
      const double epsilon = std::sqrt(2.0) * sigma / pair.beta;
      const double betas[1] = {pair.beta};
      const WpbParams w = omega_params(pair.alpha, betas, {}, epsilon);
      try {
        const NStarResult ns = n_star(w, timing);
        groups[g][t] = Sample{t, static_cast<double>(n_star_brute(w, timing)),
                              ns.analytic, static_cast<double>(ns.clamped)};
        break;
      } catch (const InfeasibleTrainingError&) {
        continue;
      }
    }
  });

  ResultTable table;
  table.provenance = provenance("nstar-cdf", reader);
  table.columns = {"snr_db", "trial", "n_star_brute", "n_star_analytic",
                   "n_star_clamped", "cdf"};
  for (std::size_t g = 0; g < snrs.size(); ++g) {
    std::vector<Sample>& samples = groups[g];
    std::sort(samples.begin(), samples.end(), [](const Sample& a, const Sample& b) {
      return a.brute != b.brute ? a.brute < b.brute : a.trial < b.trial;
    });
    for (std::size_t i = 0; i < samples.size(); ++i) {
      const Sample& s = samples[i];
      table.append_row({snrs[g], static_cast<double>(s.trial), s.brute, s.analytic,
                        s.clamped,
                        static_cast<double>(i + 1) / static_cast<double>(trials)});
    }
  }
  return table;
}

ResultTable cmd_replay(const Config& cfg) {
  ConfigReader reader(cfg);
  const std::string trace_path = reader.require_string("trace");
  reader.declare("out");
  reader.finish();

  std::ifstream in(trace_path);
  if (!in) {
    throw std::runtime_error("cannot open trace file '" + trace_path + "'");
  }
  const TrainingTable table = read_trace(in);

  if (!is_definition1(table.thetas)) {
    std::string expected;
    for (std::size_t i = 0; i < table.thetas.size(); ++i) {
      expected += (i != 0 ? ", " : "") +
                  format_double(kTwoPi * static_cast<double>(i) /
                                static_cast<double>(table.thetas.size()));
    }
    throw std::runtime_error(
        "trace phases do not form the uniform training grid for N = " +
        std::to_string(table.thetas.size()) + "; expected {" + expected + "}");
  }

  ResultTable out;
  out.provenance = provenance("replay", reader);
  out.columns = {"slot",        "phi_hat_rad", "phi_hat_deg", "candidate_a_rad",
                 "candidate_b_rad", "discriminant", "tie"};
  for (unsigned k = 2; k <= table.antenna_count; ++k) {
    const std::vector<double> values = table.slot_values(k);
    try {
      const PhaseEstimate est = estimate_phase(values, table.thetas);
      out.append_row({static_cast<double>(k), est.resolved,
                      rad_to_deg(est.resolved), est.candidate_a, est.candidate_b,
                      est.discriminant, est.tie ? 1.0 : 0.0});
    } catch (const DegenerateFeedbackError& e) {
      throw std::runtime_error("slot " + std::to_string(k) + ": " + e.what());
    }
  }
  return out;
}

ResultTable cmd_theta(const Config& cfg) {
  ConfigReader reader(cfg);
  const std::size_t n = reader.get_size("n", 0);
  reader.declare("out");
  reader.finish();
  if (n == 0) {
    throw ConfigError("theta: need n >= 1 (config key n or --n)");
  }
  const PhaseSet thetas = make_theta(n);
  ResultTable out;
  out.provenance = provenance("theta", reader);
  out.columns = {"n", "theta_rad"};
  for (std::size_t i = 0; i < thetas.size(); ++i) {
    out.append_row({static_cast<double>(i + 1), thetas.theta(i)});
  }
  return out;
}

ResultTable run_experiment(const std::string& name, const Config& cfg) {
  if (name == "mcrlb-sweep") return cmd_mcrlb_sweep(cfg);
  if (name == "crlb-scatter") return cmd_crlb_scatter(cfg);
  if (name == "rmse-sweep") return cmd_rmse_sweep(cfg);
  if (name == "energy-cdf") return cmd_energy_cdf(cfg);
  if (name == "nstar-cdf") return cmd_nstar_cdf(cfg);
  if (name == "replay") return cmd_replay(cfg);
  if (name == "theta") return cmd_theta(cfg);
  throw ConfigError("unknown experiment '" + name + "'");
}

std::vector<std::string> experiment_names() {
  return {"mcrlb-sweep", "crlb-scatter", "rmse-sweep", "energy-cdf",
          "nstar-cdf",   "replay",       "theta"};
}

}  // namespace wetbeam::tools
