/*
 * (C) Copyright 2026 loopda developers.
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "loopda/sweeps.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <filesystem>
#include <mutex>
#include <thread>

#include "loopda/csv.hpp"
#include "loopda/errors.hpp"

namespace loopda {

void run_jobs(const std::vector<std::function<void()>>& tasks, int jobs) {
  if (jobs < 1) throw ConfigError("job count must be >= 1");
  if (jobs == 1 || tasks.size() <= 1) {
    for (const auto& t : tasks) t();
    return;
  }
  std::atomic<std::size_t> next{0};
  std::mutex err_mutex;
  std::exception_ptr first_error;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) return;
      try {
        tasks[i]();
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  const int n = std::min<int>(jobs, static_cast<int>(tasks.size()));
  pool.reserve(n);
  for (int i = 0; i < n; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

namespace {

std::string filter_label(FilterId f) {
  switch (f) {
    case FilterId::ThreeDVar: return "3dvar";
    case FilterId::Ekf: return "ekf";
    case FilterId::Enkf: return "enkf";
    case FilterId::Etkf: return "etkf";
    case FilterId::Ensrf: return "ensrf";
    case FilterId::Letkf: return "letkf";
  }
  return "?";
}

}  // namespace

std::vector<WindowSweepRow> sweep_window(const ExperimentConfig& base,
                                         const std::vector<double>& windows,
                                         const std::vector<FilterId>& filters,
                                         int jobs) {
  if (windows.empty() || filters.empty()) {
    throw ConfigError("sweep_window: windows and filters must be non-empty");
  }
  std::vector<WindowSweepRow> rows(windows.size() * filters.size());
  std::vector<std::function<void()>> tasks;
  tasks.reserve(rows.size());
  for (std::size_t wi = 0; wi < windows.size(); ++wi) {
    for (std::size_t fi = 0; fi < filters.size(); ++fi) {
      const std::size_t idx = wi * filters.size() + fi;
      tasks.push_back([&, wi, fi, idx] {
        ExperimentConfig cfg = base;
        cfg.window = windows[wi];
        cfg.filter = filters[fi];
        cfg.out_dir.clear();
        const SkillReport rep = run_twin(cfg);
        rows[idx] = {windows[wi], filters[fi], rep.mean_rmse_forecast,
                     rep.mean_rmse_analysis, rep.divergence_events};
      });
    }
  }
  run_jobs(tasks, jobs);

  if (!base.out_dir.empty()) {
    std::filesystem::create_directories(base.out_dir);
    CsvWriter csv(base.out_dir + "/window_sweep.csv",
                  {"window", "filter", "mean_rmse_forecast",
                   "mean_rmse_analysis", "divergence_events"});
    for (const auto& r : rows) {
      csv.row_strings({CsvWriter::format(r.window), filter_label(r.filter),
                       CsvWriter::format(r.mean_rmse_forecast),
                       CsvWriter::format(r.mean_rmse_analysis),
                       std::to_string(r.divergence_events)});
    }
  }
  return rows;
}

InflationSweepResult sweep_inflation(const ExperimentConfig& base, int grid,
                                     double mult_min, double mult_max,
                                     double add_min, double add_max,
                                     int n_seeds, int jobs) {
  if (grid < 2) throw ConfigError("sweep_inflation: grid must be >= 2");
  if (n_seeds < 1) throw ConfigError("sweep_inflation: n_seeds must be >= 1");
  if (mult_min < 1.0 || mult_max < mult_min || add_min < 0.0 ||
      add_max < add_min) {
    throw ConfigError("sweep_inflation: bad grid bounds");
  }

  InflationSweepResult result;
  result.grid = grid;
  result.cells.resize(std::size_t(grid) * grid);
  std::vector<std::function<void()>> tasks;
  tasks.reserve(result.cells.size());
  for (int mi = 0; mi < grid; ++mi) {
    for (int ai = 0; ai < grid; ++ai) {
      const std::size_t idx = std::size_t(mi) * grid + ai;
      const double mult =
          mult_min + (mult_max - mult_min) * mi / double(grid - 1);
      const double add = add_min + (add_max - add_min) * ai / double(grid - 1);
      tasks.push_back([&, idx, mult, add] {
        double rmse = 0.0;
        int divergences = 0;
        for (int s = 0; s < n_seeds; ++s) {
          ExperimentConfig cfg = base;
          cfg.seed = base.seed + std::uint64_t(s);
          cfg.inflation.mult = mult;
          cfg.inflation.add = add;
          cfg.inflation.letkf_rho = mult;  // same knob for the local solver
          cfg.out_dir.clear();
          const SkillReport rep = run_twin(cfg);
          rmse += rep.mean_rmse_analysis;
          divergences += rep.divergence_events;
        }
        result.cells[idx] = {mult, add, rmse / n_seeds, divergences};
      });
    }
  }
  run_jobs(tasks, jobs);

  result.best_rmse = std::numeric_limits<double>::infinity();
  for (int mi = 0; mi < grid; ++mi) {
    for (int ai = 0; ai < grid; ++ai) {
      const auto& cell = result.cells[std::size_t(mi) * grid + ai];
      if (cell.mean_rmse_analysis < result.best_rmse) {
        result.best_rmse = cell.mean_rmse_analysis;
        result.best_mult_index = mi;
        result.best_add_index = ai;
      }
    }
  }

  if (!base.out_dir.empty()) {
    std::filesystem::create_directories(base.out_dir);
    CsvWriter csv(base.out_dir + "/inflation_sweep.csv",
                  {"mult", "add", "mean_rmse_analysis", "divergence_events",
                   "is_best"});
    for (int mi = 0; mi < grid; ++mi) {
      for (int ai = 0; ai < grid; ++ai) {
        const auto& cell = result.cells[std::size_t(mi) * grid + ai];
        const bool best =
            mi == result.best_mult_index && ai == result.best_add_index;
        csv.row({cell.mult, cell.add, cell.mean_rmse_analysis,
                 double(cell.divergence_events), best ? 1.0 : 0.0});
      }
    }
  }
  return result;
}

std::vector<SkillCell> skill_matrix(const ExperimentConfig& base,
                                    const std::vector<int>& spacings,
                                    const std::vector<int>& shifts,
                                    bool include_adaptive, int jobs) {
  if (spacings.empty()) {
    throw ConfigError("skill_matrix: spacings must be non-empty");
  }
  if (shifts.empty() && !include_adaptive) {
    throw ConfigError("skill_matrix: no shift columns requested");
  }
  const std::size_t cols = shifts.size() + (include_adaptive ? 1 : 0);
  std::vector<SkillCell> cells(spacings.size() * cols);
  std::vector<std::function<void()>> tasks;
  tasks.reserve(cells.size());
  for (std::size_t si = 0; si < spacings.size(); ++si) {
    for (std::size_t ci = 0; ci < cols; ++ci) {
      const std::size_t idx = si * cols + ci;
      tasks.push_back([&, si, ci, idx] {
        const bool adaptive = ci == shifts.size();
        ExperimentConfig cfg = base;
        cfg.filter = FilterId::Letkf;
        cfg.obs_spacing = spacings[si];
        cfg.shift_mode = adaptive ? ShiftMode::Adaptive : ShiftMode::Fixed;
        cfg.fixed_shift = adaptive ? 0 : shifts[ci];
        cfg.out_dir.clear();
        SkillCell cell;
        cell.spacing = spacings[si];
        cell.adaptive = adaptive;
        cell.shift = cfg.fixed_shift;
        cell.report = run_twin(cfg);
        cells[idx] = std::move(cell);
      });
    }
  }
  run_jobs(tasks, jobs);

  if (!base.out_dir.empty()) {
    std::filesystem::create_directories(base.out_dir);
    CsvWriter csv(base.out_dir + "/skill_matrix.csv",
                  {"spacing", "mode", "shift", "hits", "misses",
                   "false_alarms", "correct_negatives", "skill",
                   "mean_rmse_analysis", "divergence_events"});
    for (const auto& cell : cells) {
      csv.row_strings({std::to_string(cell.spacing),
                       cell.adaptive ? "adaptive" : "fixed",
                       std::to_string(cell.shift),
                       std::to_string(cell.report.hits),
                       std::to_string(cell.report.misses),
                       std::to_string(cell.report.false_alarms),
                       std::to_string(cell.report.correct_negatives),
                       CsvWriter::format(cell.report.skill()),
                       CsvWriter::format(cell.report.mean_rmse_analysis),
                       std::to_string(cell.report.divergence_events)});
    }
  }
  return cells;
}

}  // namespace loopda
