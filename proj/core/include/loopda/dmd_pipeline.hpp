/*
 * (C) Copyright 2026 loopda developers.
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#pragma once

#include <vector>

#include "loopda/dmd.hpp"
#include "loopda/experiment.hpp"

namespace loopda {

struct DmdPipelineConfig {
  int n_snapshots = 91;  // leading window-end states used to build the basis
  std::vector<double> lag_windows = {1.0, 3.0, 5.0, 7.0};  // in analysis windows
  double rank_tol = 1e-10;
};

struct DmdPipelineResult {
  SnapshotMatrix snapshots;
  DmdBasis basis;
  std::vector<ReversalEvent> reversals;
  std::vector<ModeScore> scores;
  int mode_i = 0;  // the two strongest precursor modes
  int mode_j = 0;
  std::vector<PhasePoint> phase;
  std::vector<EigenvalueRow> eigenvalues;
};

/// Free-run mode analysis: snapshots from the leading window-end states of
/// the truth trajectory, a snapshot-pair basis, precursor scoring of every
/// mode against detected flow reversals over the full run, and the phase
/// plane of the two best precursor modes. Writes snapshots (CSV + binary),
/// mode_scores.csv, phase_plane.csv and eigenvalues.csv when cfg.out_dir
/// is set.
DmdPipelineResult dmd_pipeline(const ExperimentConfig& cfg,
                               const DmdPipelineConfig& pcfg);

}  // namespace loopda
