/*
 * (C) Copyright 2026 loopda developers.
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#pragma once

#include <vector>

#include "loopda/rng.hpp"
#include "loopda/types.hpp"

namespace loopda {

/// K state vectors stored as columns. Mean and perturbations are derived
/// on demand and never cached.
class Ensemble {
 public:
  explicit Ensemble(Matrix members);

  int dim() const { return static_cast<int>(members_.rows()); }
  int size() const { return static_cast<int>(members_.cols()); }

  const Matrix& members() const { return members_; }
  Vector member(int k) const { return members_.col(k); }
  void set_member(int k, const Vector& x) { members_.col(k) = x; }

  Vector mean() const { return members_.rowwise().mean(); }

  /// Columns = member minus mean.
  Matrix perturbations() const {
    return members_.colwise() - Eigen::VectorXd(mean());
  }

 private:
  Matrix members_;
};

enum class CovMode { Standard, LeaveOneOut };

/// Standard: (1/(K-1)) Z Z^T.
/// LeaveOneOut: (1/(K-2)) sum_k (x_k - xbar_{-k})(x_k - xbar_{-k})^T with
/// the mean excluding member k; requires K >= 3.
Matrix ensemble_cov(const Ensemble& e, CovMode mode = CovMode::Standard);

struct InflationParams {
  double mult = 1.0;       // multiplicative factor on perturbations, >= 1
  double add = 0.0;        // i.i.d. noise std added per component, >= 0
  double letkf_rho = 1.0;  // covariance inflation inside the local solve, >= 1
};

/// Scales perturbations by mult about the mean, then adds N(0, add^2)
/// noise per component.
Ensemble inflate(const Ensemble& e, const InflationParams& infl,
                 RngStream& rng);

}  // namespace loopda
