/*
 * (C) Copyright 2026 loopda developers.
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#pragma once

#include "loopda/stepper.hpp"
#include "loopda/types.hpp"

namespace loopda {

/// Three-variable convection-loop ODE: x1 mean velocity, x2 the 3-9
/// o'clock temperature difference, x3 deviation from the conductive
/// temperature profile.
struct EmParams {
  double alpha = 10.0;
  double beta = 28.0;
  double k_wall = 0.0;  // velocity-dependent wall coupling; 0 recovers Lorenz with unit decay
};

/// Wall-coupling velocity function: x^{1/3} for x >= 1, the analytic
/// polynomial p(x) = (44x^2 - 55x^3 + 20x^4)/9 below, C1-matched at 1.
/// Domain x >= 0.
double h_eval(double x);
double h_prime(double x);

Vector em3_rhs(const EmParams& p, const Vector& x);
Matrix em3_jac(const EmParams& p, const Vector& x);

RhsFn em3_rhs_fn(const EmParams& p);
JacFn em3_jac_fn(const EmParams& p);

}  // namespace loopda
