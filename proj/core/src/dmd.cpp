/*
 * (C) Copyright 2026 loopda developers.
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "loopda/dmd.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <fstream>
#include <numeric>
#include <sstream>
#include <string>

#include "loopda/errors.hpp"
#include "loopda/linalg.hpp"

namespace loopda {

DmdBasis dmd_standard(const SnapshotMatrix& d, double rank_tol) {
  if (d.data.cols() < 3) {
    throw ConfigError("dmd_standard: need at least 3 snapshots");
  }
  const Eigen::Index n = d.data.cols();
  const Matrix x = d.data.leftCols(n - 1);
  const Matrix y = d.data.rightCols(n - 1);

  const SvdResult dec = svd(x);
  int rank = 0;
  for (Eigen::Index i = 0; i < dec.s.size(); ++i) {
    if (dec.s[i] >= rank_tol * dec.s[0] && dec.s[i] > 0.0) ++rank;
  }
  if (rank == 0) {
    throw NumericalError("dmd_standard: snapshot matrix has rank 0");
  }
  const Matrix u = dec.u.leftCols(rank);
  const Matrix v = dec.v.leftCols(rank);
  const Vector sinv = dec.s.head(rank).cwiseInverse();

  const Matrix atilde = u.transpose() * y * v * sinv.asDiagonal();
  Eigen::EigenSolver<Matrix> eig(atilde);
  if (eig.info() != Eigen::Success) {
    throw NumericalError("dmd_standard: eigendecomposition failed");
  }

  ComplexVector lambda = eig.eigenvalues();
  ComplexMatrix modes = u * eig.eigenvectors();

  // descending |lambda|, ties by ascending |arg lambda|
  std::vector<int> order(rank);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const double ma = std::abs(lambda[a]), mb = std::abs(lambda[b]);
    if (ma != mb) return ma > mb;
    return std::abs(std::arg(lambda[a])) < std::abs(std::arg(lambda[b]));
  });

  DmdBasis basis;
  basis.rank = rank;
  basis.eigenvalues.resize(rank);
  basis.modes.resize(modes.rows(), rank);
  for (int i = 0; i < rank; ++i) {
    basis.eigenvalues[i] = lambda[order[i]];
    basis.modes.col(i) = modes.col(order[i]);
  }
  return basis;
}

Vector dmd_project(const DmdBasis& basis, const Vector& x) {
  if (basis.rank == 0) throw ConfigError("dmd_project: empty basis");
  const Matrix phi = basis.modes.real();
  return pinv(phi) * x;
}

namespace {

double sample_spacing(const std::vector<double>& times) {
  if (times.size() < 2) return 0.0;
  return times[1] - times[0];
}

// indices of states closest to (event time - lag), within half a sample
std::vector<int> states_at_lag(const std::vector<double>& times,
                               const std::vector<ReversalEvent>& reversals,
                               double lag) {
  std::vector<int> idx;
  const double tol = 0.5 * sample_spacing(times);
  for (const auto& rev : reversals) {
    const double target = rev.time - lag;
    int best = -1;
    double best_err = tol > 0.0 ? tol : 1e-9;
    for (std::size_t i = 0; i < times.size(); ++i) {
      const double err = std::abs(times[i] - target);
      if (err <= best_err) {
        best_err = err;
        best = static_cast<int>(i);
      }
    }
    if (best >= 0) idx.push_back(best);
  }
  return idx;
}

}  // namespace

std::vector<ModeScore> prereversal_scores(
    const DmdBasis& basis, const Matrix& states,
    const std::vector<double>& times,
    const std::vector<ReversalEvent>& reversals,
    const std::vector<double>& lags) {
  if (static_cast<Eigen::Index>(times.size()) != states.cols()) {
    throw ConfigError("prereversal_scores: times/states mismatch");
  }
  if (reversals.empty()) return {};

  const Matrix phi_pinv = pinv(basis.modes.real());
  const Matrix coeffs = phi_pinv * states;  // rank x T

  std::vector<std::vector<int>> lag_sets;
  for (double lag : lags) lag_sets.push_back(states_at_lag(times, reversals, lag));

  std::vector<ModeScore> scores;
  for (int m = 0; m < basis.rank; ++m) {
    ModeScore s;
    s.mode = m;
    s.all_mean_log10 = std::log10(coeffs.row(m).cwiseAbs().mean() + 1e-300);
    for (const auto& set : lag_sets) {
      if (set.empty()) {
        s.lag_mean_log10.push_back(s.all_mean_log10);
        continue;
      }
      double acc = 0.0;
      for (int i : set) acc += std::abs(coeffs(m, i));
      s.lag_mean_log10.push_back(std::log10(acc / set.size() + 1e-300));
    }
    for (double lm : s.lag_mean_log10) {
      s.precursor = std::max(s.precursor, std::abs(lm - s.all_mean_log10));
    }
    scores.push_back(std::move(s));
  }
  return scores;
}

std::vector<PhasePoint> phase_plane(const DmdBasis& basis, const Matrix& states,
                                    const std::vector<double>& times,
                                    int mode_i, int mode_j,
                                    const std::vector<ReversalEvent>& reversals,
                                    double window) {
  if (mode_i < 0 || mode_i >= basis.rank || mode_j < 0 ||
      mode_j >= basis.rank) {
    throw ConfigError("phase_plane: mode index out of range");
  }
  const Matrix coeffs = pinv(basis.modes.real()) * states;

  std::vector<FlowDirection> flag_dir(times.size(),
                                      FlowDirection::ToClockwise);
  std::vector<bool> is_flagged(times.size(), false);
  for (std::size_t r = 0; r < reversals.size(); ++r) {
    const auto one = states_at_lag(times, {reversals[r]}, window);
    for (int i : one) {
      is_flagged[i] = true;
      flag_dir[i] = reversals[r].direction;
    }
  }

  std::vector<PhasePoint> rows;
  rows.reserve(times.size());
  for (std::size_t t = 0; t < times.size(); ++t) {
    PhasePoint p;
    p.time = times[t];
    p.ci = coeffs(mode_i, static_cast<Eigen::Index>(t));
    p.cj = coeffs(mode_j, static_cast<Eigen::Index>(t));
    p.pre_reversal = is_flagged[t];
    p.direction = flag_dir[t];
    rows.push_back(p);
  }
  return rows;
}

std::vector<EigenvalueRow> eigenvalue_map(const DmdBasis& basis) {
  std::vector<EigenvalueRow> rows;
  for (int i = 0; i < basis.rank; ++i) {
    const std::complex<double> lam = basis.eigenvalues[i];
    EigenvalueRow r;
    r.re = lam.real();
    r.im = lam.imag();
    // small tolerance so neutral (unit-circle) modes are not flagged by
    // rounding in the eigensolve
    r.unstable = std::abs(lam) > 1.0 + 1e-9;
    if (lam == std::complex<double>(0.0, 0.0)) {
      r.log_defined = false;
    } else {
      const std::complex<double> lg = std::log(lam) / std::log(10.0);
      r.log_re = lg.real();
      r.log_im = lg.imag();
    }
    rows.push_back(r);
  }
  return rows;
}

void write_snapshots_csv(std::ostream& out, const SnapshotMatrix& d) {
  out.precision(17);
  for (Eigen::Index i = 0; i < d.data.rows(); ++i) {
    for (Eigen::Index j = 0; j < d.data.cols(); ++j) {
      if (j) out << ',';
      out << d.data(i, j);
    }
    out << '\n';
  }
}

SnapshotMatrix read_snapshots_csv(std::istream& in, double interval,
                                  double t0) {
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw ConfigError("read_snapshots_csv: ragged rows");
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ConfigError("read_snapshots_csv: empty input");
  SnapshotMatrix d;
  d.interval = interval;
  d.t0 = t0;
  d.data.resize(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      d.data(i, j) = rows[i][j];
    }
  }
  return d;
}

void write_snapshots_binary(const std::string& path, const SnapshotMatrix& d) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("write_snapshots_binary: cannot open " + path);
  out.write("DMD1", 4);
  const std::int64_t rows = d.data.rows();
  const std::int64_t cols = d.data.cols();
  out.write(reinterpret_cast<const char*>(&rows), sizeof(rows));
  out.write(reinterpret_cast<const char*>(&cols), sizeof(cols));
  out.write(reinterpret_cast<const char*>(&d.interval), sizeof(double));
  out.write(reinterpret_cast<const char*>(&d.t0), sizeof(double));
  out.write(reinterpret_cast<const char*>(d.data.data()),
            sizeof(double) * rows * cols);
}

SnapshotMatrix read_snapshots_binary(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("read_snapshots_binary: cannot open " + path);
  char magic[4];
  in.read(magic, 4);
  if (!in || std::string(magic, 4) != "DMD1") {
    throw ConfigError("read_snapshots_binary: bad magic in " + path);
  }
  std::int64_t rows = 0, cols = 0;
  SnapshotMatrix d;
  in.read(reinterpret_cast<char*>(&rows), sizeof(rows));
  in.read(reinterpret_cast<char*>(&cols), sizeof(cols));
  in.read(reinterpret_cast<char*>(&d.interval), sizeof(double));
  in.read(reinterpret_cast<char*>(&d.t0), sizeof(double));
  if (!in || rows <= 0 || cols <= 0) {
    throw ConfigError("read_snapshots_binary: corrupt header in " + path);
  }
  d.data.resize(rows, cols);
  in.read(reinterpret_cast<char*>(d.data.data()), sizeof(double) * rows * cols);
  if (!in) throw ConfigError("read_snapshots_binary: truncated data in " + path);
  return d;
}

}  // namespace loopda
