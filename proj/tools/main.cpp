/*
 * (C) Copyright 2026 loopda developers.
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include <chrono>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "loopda/dmd_pipeline.hpp"
#include "loopda/errors.hpp"
#include "loopda/experiment.hpp"
#include "loopda/sweeps.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

struct CommonArgs {
  std::string config_path;
  std::string out_dir;
  std::int64_t seed = -1;
  int jobs = 1;
};

void add_common(CLI::App* sub, CommonArgs& args) {
  sub->add_option("--config", args.config_path, "flat key = value config file")
      ->required();
  sub->add_option("--seed", args.seed, "override the config seed");
  sub->add_option("--out-dir", args.out_dir, "override the output directory");
  sub->add_option("--jobs", args.jobs, "worker threads for sweeps")
      ->check(CLI::PositiveNumber);
}

loopda::Config effective_config(const CommonArgs& args) {
  loopda::Config cfg = loopda::load_config_or_manifest(args.config_path);
  if (args.seed >= 0) cfg.set("seed", std::to_string(args.seed));
  if (!args.out_dir.empty()) cfg.set("out_dir", args.out_dir);
  return cfg;
}

std::vector<double> parse_double_list(const loopda::Config& cfg,
                                      const std::string& key,
                                      const std::vector<double>& dflt) {
  if (!cfg.has(key)) return dflt;
  std::vector<double> out;
  std::stringstream ss(cfg.get_string(key));
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t pos = 0;
      const double v = std::stod(item, &pos);
      while (pos < item.size() && std::isspace(item[pos])) ++pos;
      if (pos != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw loopda::ConfigError("config key " + key + ": bad list item '" +
                                item + "'");
    }
  }
  if (out.empty()) throw loopda::ConfigError("config key " + key + ": empty list");
  return out;
}

std::vector<int> parse_int_list(const loopda::Config& cfg,
                                const std::string& key,
                                const std::vector<int>& dflt) {
  std::vector<double> d;
  if (!cfg.has(key)) return dflt;
  d = parse_double_list(cfg, key, {});
  std::vector<int> out;
  for (double v : d) {
    const int i = static_cast<int>(v);
    if (double(i) != v) {
      throw loopda::ConfigError("config key " + key + ": expected integers");
    }
    out.push_back(i);
  }
  return out;
}

loopda::FilterId filter_from_label(const std::string& s) {
  if (s == "3dvar") return loopda::FilterId::ThreeDVar;
  if (s == "ekf") return loopda::FilterId::Ekf;
  if (s == "enkf") return loopda::FilterId::Enkf;
  if (s == "etkf") return loopda::FilterId::Etkf;
  if (s == "ensrf") return loopda::FilterId::Ensrf;
  if (s == "letkf") return loopda::FilterId::Letkf;
  throw loopda::ConfigError("unknown filter: " + s);
}

std::vector<loopda::FilterId> parse_filter_list(
    const loopda::Config& cfg, const std::string& key,
    const std::vector<loopda::FilterId>& dflt) {
  if (!cfg.has(key)) return dflt;
  std::vector<loopda::FilterId> out;
  std::stringstream ss(cfg.get_string(key));
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) continue;
    out.push_back(filter_from_label(item.substr(b, e - b + 1)));
  }
  if (out.empty()) throw loopda::ConfigError("config key " + key + ": empty list");
  return out;
}

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

int run_twin_cmd(const CommonArgs& args) {
  Timer timer;
  const loopda::Config raw = effective_config(args);
  const loopda::ExperimentConfig cfg = loopda::experiment_from_config(raw);
  const loopda::SkillReport rep = loopda::run_twin(cfg);
  loopda::write_manifest_config(raw, cfg.out_dir, "twin", timer.seconds());
  std::cout << "twin: " << rep.scored() << " scored windows, skill "
            << rep.skill() << ", mean analysis RMSE "
            << rep.mean_rmse_analysis << ", " << rep.divergence_events
            << " divergence events\n";
  return kExitOk;
}

int sweep_window_cmd(const CommonArgs& args) {
  Timer timer;
  const loopda::Config raw = effective_config(args);
  const loopda::ExperimentConfig base = loopda::experiment_from_config(raw);
  const auto windows = parse_double_list(
      raw, "sweep_windows", {0.13, 0.26, 0.39, 0.52, 0.65});
  const auto filters = parse_filter_list(
      raw, "sweep_filters",
      {loopda::FilterId::Ekf, loopda::FilterId::Enkf, loopda::FilterId::Etkf,
       loopda::FilterId::Ensrf});
  const auto rows = loopda::sweep_window(base, windows, filters, args.jobs);
  loopda::write_manifest_config(raw, base.out_dir, "sweep-window",
                                timer.seconds());
  std::cout << "sweep-window: " << rows.size() << " runs over "
            << windows.size() << " windows\n";
  return kExitOk;
}

int sweep_inflation_cmd(const CommonArgs& args) {
  Timer timer;
  const loopda::Config raw = effective_config(args);
  const loopda::ExperimentConfig base = loopda::experiment_from_config(raw);
  const int grid = raw.get_int("inflation_grid", 16);
  const double mult_min = raw.get_double("inflation_mult_min", 1.0);
  const double mult_max = raw.get_double("inflation_mult_max", 1.5);
  const double add_min = raw.get_double("inflation_add_min", 0.0);
  const double add_max = raw.get_double("inflation_add_max", 1.5);
  const int n_seeds = raw.get_int("inflation_seeds", 20);
  const auto result = loopda::sweep_inflation(
      base, grid, mult_min, mult_max, add_min, add_max, n_seeds, args.jobs);
  loopda::write_manifest_config(raw, base.out_dir, "sweep-inflation",
                                timer.seconds());
  const auto& best =
      result.cells[std::size_t(result.best_mult_index) * grid +
                   result.best_add_index];
  std::cout << "sweep-inflation: best (mult, add) = (" << best.mult << ", "
            << best.add << "), mean analysis RMSE " << best.mean_rmse_analysis
            << "\n";
  return kExitOk;
}

int skill_matrix_cmd(const CommonArgs& args) {
  Timer timer;
  const loopda::Config raw = effective_config(args);
  const loopda::ExperimentConfig base = loopda::experiment_from_config(raw);
  const auto spacings = parse_int_list(raw, "matrix_spacings", {1, 5, 10});
  const auto shifts = parse_int_list(raw, "matrix_shifts", {0, 2, 5});
  const bool adaptive = raw.get_bool("matrix_adaptive", true);
  const auto cells =
      loopda::skill_matrix(base, spacings, shifts, adaptive, args.jobs);
  loopda::write_manifest_config(raw, base.out_dir, "skill-matrix",
                                timer.seconds());
  std::cout << "skill-matrix: " << cells.size() << " cells\n";
  return kExitOk;
}

int dmd_cmd(const CommonArgs& args) {
  Timer timer;
  const loopda::Config raw = effective_config(args);
  const loopda::ExperimentConfig cfg = loopda::experiment_from_config(raw);
  loopda::DmdPipelineConfig pcfg;
  pcfg.n_snapshots = raw.get_int("dmd_snapshots", pcfg.n_snapshots);
  pcfg.lag_windows =
      parse_double_list(raw, "dmd_lags", pcfg.lag_windows);
  pcfg.rank_tol = raw.get_double("dmd_rank_tol", pcfg.rank_tol);
  const auto result = loopda::dmd_pipeline(cfg, pcfg);
  loopda::write_manifest_config(raw, cfg.out_dir, "dmd", timer.seconds());
  std::cout << "dmd: rank " << result.basis.rank << ", "
            << result.reversals.size() << " reversals, precursor modes ("
            << result.mode_i << ", " << result.mode_j << ")\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"convection-loop data assimilation laboratory"};
  app.require_subcommand(1);

  CommonArgs twin_args, sw_args, si_args, sm_args, dmd_args;
  add_common(app.add_subcommand("twin", "one twin experiment"), twin_args);
  add_common(app.add_subcommand("sweep-window",
                                "window-length sweep over filters"),
             sw_args);
  add_common(app.add_subcommand("sweep-inflation",
                                "inflation grid search"),
             si_args);
  add_common(app.add_subcommand("skill-matrix",
                                "observation spacing x zone shift matrix"),
             sm_args);
  add_common(app.add_subcommand("dmd", "snapshot mode analysis pipeline"),
             dmd_args);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (app.got_subcommand("twin")) return run_twin_cmd(twin_args);
    if (app.got_subcommand("sweep-window")) return sweep_window_cmd(sw_args);
    if (app.got_subcommand("sweep-inflation")) {
      return sweep_inflation_cmd(si_args);
    }
    if (app.got_subcommand("skill-matrix")) return skill_matrix_cmd(sm_args);
    if (app.got_subcommand("dmd")) return dmd_cmd(dmd_args);
  } catch (const loopda::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const loopda::NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  }
  return kExitConfig;
}
