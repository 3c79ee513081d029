/*
 * (C) Copyright 2026 loopda developers.
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "loopda/models/em3.hpp"

#include <cmath>
#include <string>

#include "loopda/errors.hpp"

namespace loopda {

double h_eval(double x) {
  if (x < 0.0) {
    throw ConfigError("h_eval: negative argument " + std::to_string(x));
  }
  if (x >= 1.0) return std::cbrt(x);
  return (44.0 * x * x - 55.0 * x * x * x + 20.0 * x * x * x * x) / 9.0;
}

double h_prime(double x) {
  if (x < 0.0) {
    throw ConfigError("h_prime: negative argument " + std::to_string(x));
  }
  if (x >= 1.0) return 1.0 / (3.0 * std::cbrt(x) * std::cbrt(x));
  return (88.0 * x - 165.0 * x * x + 80.0 * x * x * x) / 9.0;
}

Vector em3_rhs(const EmParams& p, const Vector& x) {
  const double damp = 1.0 + p.k_wall * h_eval(std::abs(x[0]));
  Vector f(3);
  f[0] = p.alpha * (x[1] - x[0]);
  f[1] = p.beta * x[0] - x[1] * damp - x[0] * x[2];
  f[2] = x[0] * x[1] - x[2] * damp;
  return f;
}

Matrix em3_jac(const EmParams& p, const Vector& x) {
  const double a = std::abs(x[0]);
  const double damp = 1.0 + p.k_wall * h_eval(a);
  // d/dx1 of h(|x1|); h'(0) = 0 so the sign convention at 0 is moot
  const double sgn = x[0] >= 0.0 ? 1.0 : -1.0;
  const double ddamp = p.k_wall * h_prime(a) * sgn;
  Matrix j(3, 3);
  j << -p.alpha, p.alpha, 0.0,
       p.beta - x[1] * ddamp - x[2], -damp, -x[0],
       x[1] - x[2] * ddamp, x[0], -damp;
  return j;
}

RhsFn em3_rhs_fn(const EmParams& p) {
  return [p](const Vector& x) { return em3_rhs(p, x); };
}

JacFn em3_jac_fn(const EmParams& p) {
  return [p](const Vector& x) { return em3_jac(p, x); };
}

}  // namespace loopda
