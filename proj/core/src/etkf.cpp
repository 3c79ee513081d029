/*
 * (C) Copyright 2026 loopda developers.
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "loopda/filters/etkf.hpp"

#include <cmath>

#include "loopda/errors.hpp"
#include "loopda/linalg.hpp"

namespace loopda {

Ensemble etkf_analysis(const Ensemble& e, const ObservationBatch& obs,
                       const InflationParams& infl, RngStream& rng) {
  const Ensemble bg = inflate(e, infl, rng);
  const auto& spec = obs.spec;
  const int k = bg.size();

  const Vector mean = bg.mean();
  const Matrix z = bg.perturbations() / std::sqrt(double(k - 1));
  Matrix yz(spec.size(), k);
  for (int j = 0; j < k; ++j) yz.col(j) = apply_h(spec, z.col(j));

  const Vector rinv = r_diagonal(spec).cwiseInverse();
  const Matrix s = yz.transpose() * rinv.asDiagonal() * yz;
  const SymEig eig = sym_eig(0.5 * (s + s.transpose()));

  // S is PSD by construction; with very accurate observations its zero
  // eigenvalues can come back as large negatives (absolute rounding error
  // scales with the top eigenvalue), so clamp before shifting.
  const Vector lam = eig.values.cwiseMax(0.0);
  // (I + Lambda)^{-1} and its symmetric inverse root in the eigenbasis
  const Vector gd = (lam.array() + 1.0).inverse();
  const Matrix q = eig.vectors;
  const Matrix transform =
      q * gd.cwiseSqrt().asDiagonal() * q.transpose();  // (I+S)^{-1/2}

  const Vector innovation = obs.values - apply_h(spec, mean);
  const Vector w =
      q * (gd.asDiagonal() *
           (q.transpose() * (yz.transpose() * (rinv.asDiagonal() * innovation))));

  const Vector new_mean = mean + z * w;
  const Matrix za = z * transform;

  Matrix members(bg.dim(), k);
  const double scale = std::sqrt(double(k - 1));
  for (int j = 0; j < k; ++j) {
    members.col(j) = new_mean + scale * za.col(j);
  }
  return Ensemble(std::move(members));
}

}  // namespace loopda
