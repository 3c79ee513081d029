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

struct Lorenz63Params {
  double sigma = 10.0;
  double rho = 28.0;
  double beta = 8.0 / 3.0;
};

Vector lorenz_rhs(const Lorenz63Params& p, const Vector& x);
Matrix lorenz_jac(const Lorenz63Params& p, const Vector& x);

RhsFn lorenz_rhs_fn(const Lorenz63Params& p);
JacFn lorenz_jac_fn(const Lorenz63Params& p);

}  // namespace loopda
