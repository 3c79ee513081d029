/*
 * (C) Copyright 2026 loopda developers.
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "loopda/models/reversals.hpp"
#include "loopda/types.hpp"

namespace loopda {

/// Uniformly sampled state snapshots, one per column.
struct SnapshotMatrix {
  Matrix data;
  double interval = 0.0;
  double t0 = 0.0;
};

/// Modes sorted by descending |lambda|, ties broken by ascending |arg|.
struct DmdBasis {
  ComplexMatrix modes;       // one column per retained mode
  ComplexVector eigenvalues;
  int rank = 0;
};

/// Standard snapshot-pair decomposition: SVD of the first N-1 columns
/// truncated at sigma_i/sigma_1 < rank_tol, the propagator projected into
/// the reduced basis, and its eigenpairs lifted back to state space.
DmdBasis dmd_standard(const SnapshotMatrix& d, double rank_tol = 1e-10);

/// Least-squares coefficients of x on the real parts of the modes via
/// the pseudoinverse (graceful on rank-deficient mode sets).
Vector dmd_project(const DmdBasis& basis, const Vector& x);

struct ModeScore {
  int mode = 0;
  double all_mean_log10 = 0.0;             // log10 mean |coeff| over all states
  std::vector<double> lag_mean_log10;      // same, restricted to each lag
  double precursor = 0.0;                  // max |lag mean - all mean|
};

/// For each mode, compares the mean projection magnitude over all states
/// with the mean over states each lag before a reversal. States are the
/// columns of `states` at `times`; lags are in time units.
std::vector<ModeScore> prereversal_scores(
    const DmdBasis& basis, const Matrix& states,
    const std::vector<double>& times, const std::vector<ReversalEvent>& reversals,
    const std::vector<double>& lags);

struct PhasePoint {
  double time = 0.0;
  double ci = 0.0;
  double cj = 0.0;
  bool pre_reversal = false;
  FlowDirection direction = FlowDirection::ToClockwise;
};

/// Projection of every state onto two chosen modes, with states one
/// `window` before each reversal flagged and labeled by direction.
std::vector<PhasePoint> phase_plane(const DmdBasis& basis, const Matrix& states,
                                    const std::vector<double>& times,
                                    int mode_i, int mode_j,
                                    const std::vector<ReversalEvent>& reversals,
                                    double window);

struct EigenvalueRow {
  double re = 0.0;
  double im = 0.0;
  double log_re = 0.0;  // log10 of the complex eigenvalue, principal branch
  double log_im = 0.0;
  bool log_defined = true;
  bool unstable = false;  // |lambda| > 1 beyond rounding tolerance
};

std::vector<EigenvalueRow> eigenvalue_map(const DmdBasis& basis);

// Snapshot persistence: CSV (row = state component, column = time) and a
// compact binary form (magic "DMD1", little-endian doubles, column-major).
void write_snapshots_csv(std::ostream& out, const SnapshotMatrix& d);
SnapshotMatrix read_snapshots_csv(std::istream& in, double interval, double t0);
void write_snapshots_binary(const std::string& path, const SnapshotMatrix& d);
SnapshotMatrix read_snapshots_binary(const std::string& path);

}  // namespace loopda
