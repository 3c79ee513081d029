/*
 * (C) Copyright 2026 loopda developers.
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "loopda/experiment.hpp"

namespace loopda {

/// Runs `tasks` on up to `jobs` worker threads. Results land in a vector
/// indexed by task, so aggregation order (and therefore every output byte)
/// is independent of the worker count.
void run_jobs(const std::vector<std::function<void()>>& tasks, int jobs);

struct WindowSweepRow {
  double window = 0.0;
  FilterId filter = FilterId::Etkf;
  double mean_rmse_forecast = 0.0;
  double mean_rmse_analysis = 0.0;
  int divergence_events = 0;
};

/// One twin run per (window, filter) pair; everything else comes from
/// `base`. Writes window_sweep.csv into base.out_dir when set.
std::vector<WindowSweepRow> sweep_window(const ExperimentConfig& base,
                                         const std::vector<double>& windows,
                                         const std::vector<FilterId>& filters,
                                         int jobs);

struct InflationCell {
  double mult = 0.0;
  double add = 0.0;
  double mean_rmse_analysis = 0.0;  // averaged over seeds
  int divergence_events = 0;
};

struct InflationSweepResult {
  std::vector<InflationCell> cells;  // row-major: mult outer, add inner
  int grid = 0;
  int best_mult_index = -1;
  int best_add_index = -1;
  double best_rmse = 0.0;
};

/// grid x grid scan of (multiplicative, additive) inflation over
/// [mult_min, mult_max] x [add_min, add_max], each cell averaged over
/// n_seeds consecutive seeds starting at base.seed. Ties on the minimum
/// break toward smaller mult, then smaller add. Writes
/// inflation_sweep.csv when base.out_dir is set.
InflationSweepResult sweep_inflation(const ExperimentConfig& base, int grid,
                                     double mult_min, double mult_max,
                                     double add_min, double add_max,
                                     int n_seeds, int jobs);

struct SkillCell {
  int spacing = 1;
  bool adaptive = false;
  int shift = 0;  // fixed zone shift; ignored when adaptive
  SkillReport report;
};

/// Observation-spacing x zone-shift matrix for the localized filter.
/// Adds one adaptive-shift column when include_adaptive is true. Writes
/// skill_matrix.csv when base.out_dir is set.
std::vector<SkillCell> skill_matrix(const ExperimentConfig& base,
                                    const std::vector<int>& spacings,
                                    const std::vector<int>& shifts,
                                    bool include_adaptive, int jobs);

}  // namespace loopda
