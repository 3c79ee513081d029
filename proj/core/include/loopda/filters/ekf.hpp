/*
 * (C) Copyright 2026 loopda developers.
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#pragma once

#include "loopda/errors.hpp"
#include "loopda/observing.hpp"
#include "loopda/stepper.hpp"
#include "loopda/types.hpp"

namespace loopda {

struct GaussianBelief {
  Vector mean;
  Matrix cov;
};

/// Raised when the forecast covariance trace exceeds its cap.
class DivergenceError : public NumericalError {
 public:
  explicit DivergenceError(const std::string& what) : NumericalError(what) {}
};

/// One extended-Kalman cycle: the mean is forecast with the nonlinear
/// model over n_steps, the covariance with the chained per-step tangent
/// linear propagator (P <- L P L^T each step, plus Q per window), then the
/// standard gain/analysis update. trace_cap <= 0 disables the divergence
/// check.
GaussianBelief ekf_cycle(const GaussianBelief& belief, const RhsFn& rhs,
                         const JacFn& jac, const StepperSpec& spec,
                         int n_steps, const ObservationBatch& obs,
                         const Matrix& q, double trace_cap = -1.0);

}  // namespace loopda
