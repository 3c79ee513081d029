/*
 * (C) Copyright 2026 loopda developers.
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "loopda/stepper.hpp"

#include <cmath>
#include <string>

#include "loopda/errors.hpp"

namespace loopda {

namespace {

Vector eval_rhs(const RhsFn& rhs, const Vector& x) {
  Vector f = rhs(x);
  for (Eigen::Index i = 0; i < f.size(); ++i) {
    if (!std::isfinite(f[i])) {
      throw NumericalError("step: rhs produced non-finite value in component " +
                           std::to_string(i));
    }
  }
  return f;
}

}  // namespace

Vector step(const RhsFn& rhs, const StepperSpec& spec, const Vector& x) {
  const double dt = spec.dt;
  const Vector k1 = eval_rhs(rhs, x);
  if (spec.scheme == Scheme::Rk2) {
    // midpoint method
    const Vector k2 = eval_rhs(rhs, x + 0.5 * dt * k1);
    return x + dt * k2;
  }
  const Vector k2 = eval_rhs(rhs, x + 0.5 * dt * k1);
  const Vector k3 = eval_rhs(rhs, x + 0.5 * dt * k2);
  const Vector k4 = eval_rhs(rhs, x + dt * k3);
  return x + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

Matrix tlm_step(const RhsFn& rhs, const JacFn& jac, const StepperSpec& spec,
                const Vector& x, const Matrix& p) {
  if (p.rows() != x.size()) {
    throw ConfigError("tlm_step: perturbation rows " + std::to_string(p.rows()) +
                      " do not match state dimension " + std::to_string(x.size()));
  }
  const double dt = spec.dt;
  const Vector k1 = eval_rhs(rhs, x);
  // dK_i = J(stage_i) * d(stage_i)/dx applied to p
  const Matrix dk1 = jac(x) * p;
  if (spec.scheme == Scheme::Rk2) {
    const Matrix dk2 = jac(x + 0.5 * dt * k1) * (p + 0.5 * dt * dk1);
    return p + dt * dk2;
  }
  const Vector k2 = eval_rhs(rhs, x + 0.5 * dt * k1);
  const Vector k3 = eval_rhs(rhs, x + 0.5 * dt * k2);
  const Matrix dk2 = jac(x + 0.5 * dt * k1) * (p + 0.5 * dt * dk1);
  const Matrix dk3 = jac(x + 0.5 * dt * k2) * (p + 0.5 * dt * dk2);
  const Matrix dk4 = jac(x + dt * k3) * (p + dt * dk3);
  return p + (dt / 6.0) * (dk1 + 2.0 * dk2 + 2.0 * dk3 + dk4);
}

Vector tlm_step(const RhsFn& rhs, const JacFn& jac, const StepperSpec& spec,
                const Vector& x, const Vector& y) {
  Matrix p(y.size(), 1);
  p.col(0) = y;
  return tlm_step(rhs, jac, spec, x, p).col(0);
}

Matrix tlm_matrix(const RhsFn& rhs, const JacFn& jac, const StepperSpec& spec,
                  const Vector& x) {
  return tlm_step(rhs, jac, spec, x,
                  Matrix(Matrix::Identity(x.size(), x.size())));
}

}  // namespace loopda
