/*
 * (C) Copyright 2026 loopda developers.
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "loopda/models/ring.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "loopda/errors.hpp"
#include "loopda/models/em3.hpp"

namespace loopda {

namespace {

constexpr double kGuardBand = 50.0;

void check_state(const RingParams& p, const Vector& state) {
  if (state.size() != p.dim()) {
    throw ConfigError("ring: state dimension " + std::to_string(state.size()) +
                      " does not match n_cells+1 = " + std::to_string(p.dim()));
  }
  const double lo = p.wall_profile.minCoeff() - kGuardBand;
  const double hi = p.wall_profile.maxCoeff() + kGuardBand;
  for (int i = 0; i < p.n_cells; ++i) {
    if (!(state[i] >= lo && state[i] <= hi)) {
      throw NumericalError("ring: temperature blow-up in cell " +
                           std::to_string(i) + ", T = " +
                           std::to_string(state[i]));
    }
  }
  if (!std::isfinite(state[p.n_cells])) {
    throw NumericalError("ring: non-finite loop velocity");
  }
}

}  // namespace

Vector ring_cosine_wall(int n_cells, double amplitude) {
  Vector w(n_cells);
  for (int i = 0; i < n_cells; ++i) {
    const double phi = 2.0 * std::numbers::pi * (i + 0.5) / n_cells;
    w[i] = amplitude * std::cos(phi);
  }
  return w;
}

RingParams ring_chaotic_params(int n_cells) {
  RingParams p;
  p.n_cells = n_cells;
  p.alpha_w = 0.025;
  p.friction = 0.5;   // sigma = friction/(2 alpha_w) = 10
  p.buoyancy = 1.0;
  // forcing ratio 28: amplitude = 28 * 2*sigma*alpha_w^2/buoyancy
  p.wall_profile = ring_cosine_wall(n_cells, 0.35);
  p.wall_amplitude = 0.35;
  p.k_wall = 0.0;
  return p;
}

Vector ring_rhs(const RingParams& p, const Vector& state) {
  check_state(p, state);
  const int n = p.n_cells;
  const double u = state[n];
  const double dphi = 2.0 * std::numbers::pi / n;
  // the velocity-dependent term only applies to an active wall coupling
  const double aw_eff =
      p.k_wall != 0.0 && p.alpha_w > 0.0
          ? p.alpha_w * (1.0 + p.k_wall * h_eval(std::abs(u) / p.alpha_w))
          : p.alpha_w;

  Vector f(n + 1);
  double buoy = 0.0;
  for (int i = 0; i < n; ++i) {
    const double phi = 2.0 * std::numbers::pi * (i + 0.5) / n;
    // first-order upwinding in the direction of u
    const double grad = u >= 0.0
        ? (state[i] - state[(i + n - 1) % n]) / dphi
        : (state[(i + 1) % n] - state[i]) / dphi;
    f[i] = -u * grad - aw_eff * (state[i] - p.wall_profile[i]);
    buoy += state[i] * std::sin(phi);
  }
  f[n] = -0.5 * p.friction * u + p.buoyancy * buoy / n;
  return f;
}

Matrix ring_jac(const RingParams& p, const Vector& state) {
  check_state(p, state);
  const int n = p.n_cells;
  const double u = state[n];
  const double dphi = 2.0 * std::numbers::pi / n;
  const bool active_wall = p.k_wall != 0.0 && p.alpha_w > 0.0;
  const double us = active_wall ? std::abs(u) / p.alpha_w : 0.0;
  const double aw_eff =
      active_wall ? p.alpha_w * (1.0 + p.k_wall * h_eval(us)) : p.alpha_w;
  const double sgn = u >= 0.0 ? 1.0 : -1.0;
  const double daw_du = active_wall ? p.k_wall * h_prime(us) * sgn : 0.0;

  Matrix j = Matrix::Zero(n + 1, n + 1);
  for (int i = 0; i < n; ++i) {
    const double phi = 2.0 * std::numbers::pi * (i + 0.5) / n;
    if (u >= 0.0) {
      j(i, i) += -u / dphi - aw_eff;
      j(i, (i + n - 1) % n) += u / dphi;
      j(i, n) += -(state[i] - state[(i + n - 1) % n]) / dphi;
    } else {
      j(i, i) += u / dphi - aw_eff;
      j(i, (i + 1) % n) += -u / dphi;
      j(i, n) += -(state[(i + 1) % n] - state[i]) / dphi;
    }
    j(i, n) += -daw_du * (state[i] - p.wall_profile[i]);
    j(n, i) = p.buoyancy * std::sin(phi) / n;
  }
  j(n, n) = -0.5 * p.friction;
  return j;
}

RhsFn ring_rhs_fn(const RingParams& p) {
  return [p](const Vector& x) { return ring_rhs(p, x); };
}

JacFn ring_jac_fn(const RingParams& p) {
  return [p](const Vector& x) { return ring_jac(p, x); };
}

double ring_flux(const RingParams& p, const Vector& state, double rho_ref,
                 double beta_th, double t_ref, int slice_cell) {
  check_state(p, state);
  if (slice_cell < 0) slice_cell = p.n_cells / 4;  // 9 o'clock
  const double rho =
      rho_ref * (1.0 - beta_th * (state[slice_cell] - t_ref));
  return state[p.n_cells] * rho;
}

}  // namespace loopda
