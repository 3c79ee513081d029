/*
 * (C) Copyright 2026 loopda developers.
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "loopda/filters/ensemble.hpp"

#include <string>

#include "loopda/errors.hpp"

namespace loopda {

Ensemble::Ensemble(Matrix members) : members_(std::move(members)) {
  if (members_.cols() < 2) {
    throw ConfigError("Ensemble: need at least 2 members, got " +
                      std::to_string(members_.cols()));
  }
}

Matrix ensemble_cov(const Ensemble& e, CovMode mode) {
  const int k = e.size();
  if (mode == CovMode::Standard) {
    const Matrix z = e.perturbations();
    return z * z.transpose() / (k - 1);
  }
  if (k < 3) {
    throw ConfigError("ensemble_cov: LeaveOneOut needs K >= 3");
  }
  const Vector mean = e.mean();
  Matrix cov = Matrix::Zero(e.dim(), e.dim());
  for (int j = 0; j < k; ++j) {
    // mean over all members except j
    const Vector loo_mean = (mean * k - e.member(j)) / (k - 1);
    const Vector d = e.member(j) - loo_mean;
    cov += d * d.transpose();
  }
  return cov / (k - 2);
}

Ensemble inflate(const Ensemble& e, const InflationParams& infl,
                 RngStream& rng) {
  if (infl.mult < 1.0 || infl.add < 0.0 || infl.letkf_rho < 1.0) {
    throw ConfigError("inflate: need mult >= 1, add >= 0, rho >= 1");
  }
  if (infl.mult == 1.0 && infl.add == 0.0) return e;
  const Vector mean = e.mean();
  Matrix members = e.members();
  for (int j = 0; j < members.cols(); ++j) {
    members.col(j) = mean + infl.mult * (members.col(j) - mean);
    if (infl.add > 0.0) {
      for (int i = 0; i < members.rows(); ++i) {
        members(i, j) += infl.add * rng.normal();
      }
    }
  }
  return Ensemble(std::move(members));
}

}  // namespace loopda
