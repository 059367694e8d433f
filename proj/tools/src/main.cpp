// SPDX-License-Identifier: Apache-2.0
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "config.hpp"
#include "experiments.hpp"
#include "result_table.hpp"
#include "wetbeam/version.hpp"

namespace {

using wetbeam::tools::Config;
using wetbeam::tools::ConfigError;

struct CliOptions {
  std::string config_path;
  std::string out_path;
  std::string trace_path;
  std::string seed;
  std::string trials;
  std::string workers;
  std::string n_value;
};

int run(const std::string& experiment, const CliOptions& opts) {
  Config cfg;
  if (!opts.config_path.empty()) {
    cfg = Config::parse_file(opts.config_path);
  }
  // Command-line values override the file.
  if (!opts.seed.empty()) cfg.set("seed", opts.seed);
  if (!opts.trials.empty()) cfg.set("trials", opts.trials);
  if (!opts.workers.empty()) cfg.set("workers", opts.workers);
  if (!opts.trace_path.empty()) cfg.set("trace", opts.trace_path);
  if (!opts.n_value.empty()) cfg.set("n", opts.n_value);
  if (!opts.out_path.empty()) cfg.set("out", opts.out_path);

  const wetbeam::tools::ResultTable table =
      wetbeam::tools::run_experiment(experiment, cfg);

  const auto it = cfg.values().find("out");
  if (it == cfg.values().end() || it->second.empty() || it->second == "-") {
    table.write_csv(std::cout);
  } else {
    std::ofstream out(it->second, std::ios::binary);
    if (!out) {
      throw std::runtime_error("cannot open output file '" + it->second + "'");
    }
    table.write_csv(out);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"RSSI-feedback energy beamforming experiment runner"};
  app.set_version_flag("--version", std::string(wetbeam::kVersion));
  app.require_subcommand(1);

  const std::map<std::string, std::string> blurbs = {
      {"mcrlb-sweep", "averaged phase-error bound vs training length"},
      {"crlb-scatter", "per-phase bound for random grids vs the uniform grid"},
      {"rmse-sweep", "Monte Carlo estimator RMSE vs training length and SNR"},
      {"energy-cdf", "harvested-energy CDFs vs perfect CSI and grid baseline"},
      {"nstar-cdf", "CDF of the harvest-optimal training length"},
      {"replay", "estimate phases from a recorded feedback trace"},
      {"theta", "print the uniform training phase set"},
  };
  CliOptions opts;
  std::string experiment;
  for (const std::string& name : wetbeam::tools::experiment_names()) {
    CLI::App* sub = app.add_subcommand(name, blurbs.at(name));
    sub->add_option("--config", opts.config_path, "key=value configuration file");
    sub->add_option("--out", opts.out_path, "output CSV path ('-' for stdout)");
    sub->add_option("--seed", opts.seed, "RNG seed (overrides config)");
    sub->add_option("--trials", opts.trials, "Monte Carlo trials (overrides config)");
    sub->add_option("--workers", opts.workers, "worker threads");
    if (name == "replay") {
      sub->add_option("--trace", opts.trace_path, "feedback trace CSV to estimate");
    }
    if (name == "theta") {
      sub->add_option("--n", opts.n_value, "number of training phases");
    }
    sub->callback([&experiment, name] { experiment = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    return run(experiment, opts);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
