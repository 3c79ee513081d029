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

/// 1-D ring discretization of the convection-loop PDEs: n_cells wall-coupled
/// cell temperatures advected by a single scalar loop velocity.
///
/// State layout is flat: [T_0 .. T_{n-1}, u], with T_i at angle
/// phi_i = 2*pi*(i+1/2)/n measured from the 6 o'clock position.
struct RingParams {
  int n_cells = 100;
  double alpha_w = 0.025;   // wall heat-transfer rate h_w0/(rho_ref c_p)
  double friction = 0.5;    // f_w0; wall drag is (1/2) f_w0 u
  double buoyancy = 1.0;    // beta*g*R grouping on the loop integral
  Vector wall_profile;      // T_w(phi_i): hot bottom half, cold top half
  double wall_amplitude = 0.0;  // amplitude used to build a cosine profile
  double k_wall = 0.0;      // velocity-dependent wall-coupling strength

  int dim() const { return n_cells + 1; }
};

/// Chaotic-regime parameter set, committed from the sweep documented in
/// configs/ring_sweep.md. The Fourier-truncated system is a unit-decay
/// Lorenz analogue with sigma = friction/(2*alpha_w) = 10 and forcing
/// ratio 28 from the wall-profile amplitude.
RingParams ring_chaotic_params(int n_cells = 100);

/// Cosine wall profile: amplitude*cos(phi), maximal (hot) at the bottom.
Vector ring_cosine_wall(int n_cells, double amplitude);

/// Tendency of the flat ring state. Upwind advection in the direction of
/// u, midpoint quadrature for the buoyancy integral, wall rates
/// h_w = alpha_w (1 + K h(|u/alpha_w|)) and drag (1/2) friction * u.
/// Throws NumericalError when any cell leaves the blow-up guard band
/// [min(T_w)-50, max(T_w)+50].
Vector ring_rhs(const RingParams& p, const Vector& state);

/// Exact Jacobian of ring_rhs away from the u=0 upwind switch.
Matrix ring_jac(const RingParams& p, const Vector& state);

RhsFn ring_rhs_fn(const RingParams& p);
JacFn ring_jac_fn(const RingParams& p);

/// Signed mass-flux diagnostic at one angular slice (default 9 o'clock):
/// u * mean of rho_ref (1 - beta_th (T_i - T_ref)) over the slice cell.
double ring_flux(const RingParams& p, const Vector& state, double rho_ref,
                 double beta_th, double t_ref, int slice_cell = -1);

}  // namespace loopda
