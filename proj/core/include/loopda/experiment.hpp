/*
 * (C) Copyright 2026 loopda developers.
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "loopda/config.hpp"
#include "loopda/filters/ensemble.hpp"
#include "loopda/localization.hpp"
#include "loopda/models/em3.hpp"
#include "loopda/models/lorenz63.hpp"
#include "loopda/models/ring.hpp"
#include "loopda/stepper.hpp"

namespace loopda {

enum class ModelId { Lorenz63, Em3, Ring };
enum class FilterId { ThreeDVar, Ekf, Enkf, Etkf, Ensrf, Letkf };
enum class ShiftMode { Fixed, Adaptive };

struct ExperimentConfig {
  ModelId model = ModelId::Lorenz63;
  Lorenz63Params lorenz;
  EmParams em;
  RingParams ring;

  std::uint64_t seed = 1;
  StepperSpec stepper{Scheme::Rk4, 0.01};
  double window = 0.26;    // model time between analyses; integer steps
  int cycles = 1000;
  int spinup = 100;        // scored statistics exclude the first `spinup` windows
  double truth_spin_time = -1.0;  // pre-run onto the attractor; <0 = model default

  FilterId filter = FilterId::Etkf;
  InflationParams inflation;
  int ensemble_size = 10;
  CovMode cov_mode = CovMode::Standard;
  double ekf_trace_cap_factor = 1e6;

  int obs_spacing = 1;
  double obs_sigma = -1.0;  // <0: 1% of per-component climatological std
  bool observe_velocity = false;

  int zone_center = 10;
  int zone_halo = 15;
  ShiftMode shift_mode = ShiftMode::Fixed;
  int fixed_shift = 0;

  // flux diagnostic constants (ring)
  double rho_ref = 1000.0;
  double beta_th = 1e-3;
  double t_ref = 0.0;

  double reversal_hold = -1.0;  // <0: one assimilation window

  std::string out_dir;  // empty: no files written
};

ExperimentConfig experiment_from_config(const Config& cfg);
Config experiment_to_config(const ExperimentConfig& cfg);

struct WindowStat {
  double time = 0.0;
  double rmse_analysis = 0.0;
  double rmse_forecast = 0.0;
  double spread = 0.0;
  double innovation_norm = 0.0;
  int predicted_dir = 0;  // sign of ensemble-mean velocity forecast
  int truth_dir = 0;
  double flux_truth = 0.0;
  double flux_mean = 0.0;
  double flux_spread = 0.0;
  bool diverged = false;
};

struct SkillReport {
  std::vector<WindowStat> windows;  // all cycles, in order
  int spinup = 0;
  int hits = 0;
  int misses = 0;
  int false_alarms = 0;
  int correct_negatives = 0;
  int divergence_events = 0;
  double mean_rmse_analysis = 0.0;
  double mean_rmse_forecast = 0.0;
  double clim_flux_std = 0.0;

  int scored() const {
    return hits + misses + false_alarms + correct_negatives;
  }
  double skill() const {
    return hits + misses > 0 ? double(hits) / (hits + misses) : 1.0;
  }
};

/// Full twin (OSSE) experiment: truth run, synthetic observations, filter
/// cycling, per-window scoring. Writes windows.csv / skill.csv / shifts.csv
/// when cfg.out_dir is set.
SkillReport run_twin(const ExperimentConfig& cfg);

/// Truth-only free run; states sampled at every window end, flat layout.
struct TruthRun {
  std::vector<Vector> window_states;
  std::vector<double> window_times;
  Vector clim_mean;
  Vector clim_std;
};
TruthRun generate_truth(const ExperimentConfig& cfg);

/// The velocity-like component used for flow-direction scoring.
int velocity_index(const ExperimentConfig& cfg);

void write_manifest(const ExperimentConfig& cfg, const std::string& command,
                    double wall_seconds);
/// Same, but preserves every key of the raw config (including keys the
/// experiment struct does not model, e.g. sweep grids) so a rerun from the
/// manifest reproduces the outputs bitwise.
void write_manifest_config(const Config& cfg, const std::string& out_dir,
                           const std::string& command, double wall_seconds);
/// Accepts either a flat key-value config or a manifest JSON produced by
/// write_manifest.
Config load_config_or_manifest(const std::string& path);

}  // namespace loopda
