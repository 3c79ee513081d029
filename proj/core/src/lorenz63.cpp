/*
 * (C) Copyright 2026 loopda developers.
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "loopda/models/lorenz63.hpp"

namespace loopda {

Vector lorenz_rhs(const Lorenz63Params& p, const Vector& x) {
  Vector f(3);
  f[0] = p.sigma * (x[1] - x[0]);
  f[1] = x[0] * (p.rho - x[2]) - x[1];
  f[2] = x[0] * x[1] - p.beta * x[2];
  return f;
}

Matrix lorenz_jac(const Lorenz63Params& p, const Vector& x) {
  Matrix j(3, 3);
  j << -p.sigma, p.sigma, 0.0,
       p.rho - x[2], -1.0, -x[0],
       x[1], x[0], -p.beta;
  return j;
}

RhsFn lorenz_rhs_fn(const Lorenz63Params& p) {
  return [p](const Vector& x) { return lorenz_rhs(p, x); };
}

JacFn lorenz_jac_fn(const Lorenz63Params& p) {
  return [p](const Vector& x) { return lorenz_jac(p, x); };
}

}  // namespace loopda
