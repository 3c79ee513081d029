/*
 * (C) Copyright 2026 loopda developers.
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#pragma once

#include <functional>

#include "loopda/types.hpp"

namespace loopda {

enum class Scheme { Rk2, Rk4 };

/// Fixed-step explicit Runge-Kutta configuration.
struct StepperSpec {
  Scheme scheme = Scheme::Rk4;
  double dt = 0.01;
};

using RhsFn = std::function<Vector(const Vector&)>;
using JacFn = std::function<Matrix(const Vector&)>;

/// One deterministic RK2/RK4 advance of x.
Vector step(const RhsFn& rhs, const StepperSpec& spec, const Vector& x);

/// Propagates each column of p through the exact derivative of the
/// discrete RK step at x: the chain rule applied through the stage
/// recursion, not an RK solve of the variational ODE.
Matrix tlm_step(const RhsFn& rhs, const JacFn& jac, const StepperSpec& spec,
                const Vector& x, const Matrix& p);

Vector tlm_step(const RhsFn& rhs, const JacFn& jac, const StepperSpec& spec,
                const Vector& x, const Vector& y);

/// The propagator matrix L = d(RK step)/dx itself.
Matrix tlm_matrix(const RhsFn& rhs, const JacFn& jac, const StepperSpec& spec,
                  const Vector& x);

}  // namespace loopda
