/*
 * (C) Copyright 2026 loopda developers.
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "loopda/dmd_pipeline.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>

#include "loopda/csv.hpp"
#include "loopda/errors.hpp"

namespace loopda {

DmdPipelineResult dmd_pipeline(const ExperimentConfig& cfg,
                               const DmdPipelineConfig& pcfg) {
  if (pcfg.n_snapshots < 3) {
    throw ConfigError("dmd_pipeline: need at least 3 snapshots");
  }
  if (pcfg.lag_windows.empty()) {
    throw ConfigError("dmd_pipeline: lag list must be non-empty");
  }

  const TruthRun truth = generate_truth(cfg);
  const int n_states = static_cast<int>(truth.window_states.size());
  if (pcfg.n_snapshots > n_states) {
    throw ConfigError("dmd_pipeline: run too short for requested snapshots");
  }
  const int dim = static_cast<int>(truth.window_states[0].size());

  DmdPipelineResult result;
  result.snapshots.data.resize(dim, pcfg.n_snapshots);
  for (int c = 0; c < pcfg.n_snapshots; ++c) {
    result.snapshots.data.col(c) = truth.window_states[c];
  }
  result.snapshots.interval = cfg.window;
  result.snapshots.t0 = truth.window_times[0];

  result.basis = dmd_standard(result.snapshots, pcfg.rank_tol);

  // reversal detection on the full free run
  const int vi = velocity_index(cfg);
  std::vector<double> velocity(n_states);
  for (int i = 0; i < n_states; ++i) velocity[i] = truth.window_states[i][vi];
  const double hold =
      cfg.reversal_hold >= 0.0 ? cfg.reversal_hold : cfg.window;
  result.reversals = detect_reversals(truth.window_times, velocity, hold);

  Matrix states(dim, n_states);
  for (int i = 0; i < n_states; ++i) states.col(i) = truth.window_states[i];

  std::vector<double> lags(pcfg.lag_windows.size());
  for (std::size_t i = 0; i < lags.size(); ++i) {
    lags[i] = pcfg.lag_windows[i] * cfg.window;
  }
  result.scores = prereversal_scores(result.basis, states, truth.window_times,
                                     result.reversals, lags);

  // two strongest precursor modes; ties break toward the lower mode index
  std::vector<int> order(result.scores.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = int(i);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return result.scores[a].precursor > result.scores[b].precursor;
  });
  result.mode_i = result.scores.empty() ? 0 : result.scores[order[0]].mode;
  result.mode_j = order.size() > 1 ? result.scores[order[1]].mode
                                   : result.mode_i;

  result.phase = phase_plane(result.basis, states, truth.window_times,
                             result.mode_i, result.mode_j, result.reversals,
                             cfg.window);
  result.eigenvalues = eigenvalue_map(result.basis);

  if (!cfg.out_dir.empty()) {
    std::filesystem::create_directories(cfg.out_dir);
    {
      std::ofstream out(cfg.out_dir + "/snapshots.csv", std::ios::binary);
      write_snapshots_csv(out, result.snapshots);
    }
    write_snapshots_binary(cfg.out_dir + "/snapshots.bin", result.snapshots);
    {
      std::vector<std::string> header = {"mode", "all_mean_log10"};
      for (double lw : pcfg.lag_windows) {
        header.push_back("lag_" + CsvWriter::format(lw));
      }
      header.push_back("precursor");
      header.push_back("rank");
      CsvWriter csv(cfg.out_dir + "/mode_scores.csv", header);
      std::vector<int> rank_of(result.scores.size(), 0);
      for (std::size_t r = 0; r < order.size(); ++r) rank_of[order[r]] = int(r);
      for (std::size_t i = 0; i < result.scores.size(); ++i) {
        const auto& s = result.scores[i];
        std::vector<std::string> cells = {std::to_string(s.mode),
                                          CsvWriter::format(s.all_mean_log10)};
        for (double v : s.lag_mean_log10) cells.push_back(CsvWriter::format(v));
        cells.push_back(CsvWriter::format(s.precursor));
        cells.push_back(std::to_string(rank_of[i]));
        csv.row_strings(cells);
      }
    }
    {
      CsvWriter csv(cfg.out_dir + "/phase_plane.csv",
                    {"time", "ci", "cj", "pre_reversal", "direction"});
      for (const auto& p : result.phase) {
        csv.row_strings(
            {CsvWriter::format(p.time), CsvWriter::format(p.ci),
             CsvWriter::format(p.cj), p.pre_reversal ? "1" : "0",
             p.direction == FlowDirection::ToClockwise ? "to_cw" : "to_ccw"});
      }
    }
    {
      CsvWriter csv(cfg.out_dir + "/eigenvalues.csv",
                    {"re", "im", "log_re", "log_im", "log_defined",
                     "unstable"});
      for (const auto& e : result.eigenvalues) {
        csv.row({e.re, e.im, e.log_re, e.log_im, e.log_defined ? 1.0 : 0.0,
                 e.unstable ? 1.0 : 0.0});
      }
    }
  }
  return result;
}

}  // namespace loopda
