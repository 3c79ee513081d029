/*
 * (C) Copyright 2026 loopda developers.
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "loopda/filters/letkf.hpp"

#include <string>
#include <unordered_set>

#include "loopda/errors.hpp"
#include "loopda/linalg.hpp"

namespace loopda {

namespace {

// Weight-space solve for one zone; returns W = Wa + wbar 1^T (K x K).
Matrix local_weights(const Matrix& yl, const Vector& rl_inv, const Vector& dl,
                     int k, double rho) {
  const Matrix c = yl.transpose() * rl_inv.asDiagonal();
  Matrix a = c * yl;
  a.diagonal().array() += double(k - 1) / rho;
  const SymEig eig = sym_eig(0.5 * (a + a.transpose()));
  // C Y_l is PSD, so every eigenvalue is >= (k-1)/rho up to rounding;
  // with very accurate observations the small ones can come back below
  // the floor (absolute error scales with the top eigenvalue)
  const Vector lam = eig.values.cwiseMax(double(k - 1) / rho);
  const Matrix pa = eig.vectors * lam.cwiseInverse().asDiagonal() *
                    eig.vectors.transpose();
  const Matrix wa = eig.vectors *
                    (double(k - 1) * lam.cwiseInverse())
                        .cwiseSqrt()
                        .asDiagonal() *
                    eig.vectors.transpose();
  const Vector wbar = pa * (c * dl);
  return wa.colwise() + wbar;
}

}  // namespace

Ensemble letkf_analysis(const Ensemble& e, const ObservationBatch& obs,
                        const ZoneLayout& layout, const InflationParams& infl,
                        RngStream& rng, LetkfReport* report) {
  const int dim = e.dim();
  const bool has_velocity = dim == layout.ring_size + 1;
  if (!has_velocity && dim != layout.ring_size) {
    throw ConfigError("letkf: state dimension " + std::to_string(dim) +
                      " does not match zone layout ring size " +
                      std::to_string(layout.ring_size));
  }

  const Ensemble bg = inflate(e, infl, rng);
  const int k = bg.size();
  const auto& spec = obs.spec;

  const Vector mean = bg.mean();
  const Matrix zp = bg.perturbations();
  Matrix yb(spec.size(), k);
  for (int j = 0; j < k; ++j) yb.col(j) = apply_h(spec, bg.member(j));
  const Vector ybar = yb.rowwise().mean();
  const Matrix yprime = yb.colwise() - ybar;
  const Vector innovation = obs.values - ybar;
  const Vector rinv = r_diagonal(spec).cwiseInverse();

  Matrix analysis = bg.members();

  auto analyze = [&](const std::vector<int>& state_cells,
                     const std::vector<int>& local_obs, int zone_id) {
    if (local_obs.empty()) {
      if (report) report->zones_without_obs.push_back(zone_id);
      return;  // centers keep the background
    }
    const int ml = static_cast<int>(local_obs.size());
    Matrix yl(ml, k);
    Vector rl(ml), dl(ml);
    for (int i = 0; i < ml; ++i) {
      yl.row(i) = yprime.row(local_obs[i]);
      rl[i] = rinv[local_obs[i]];
      dl[i] = innovation[local_obs[i]];
    }
    const Matrix w = local_weights(yl, rl, dl, k, infl.letkf_rho);
    for (int cell : state_cells) {
      analysis.row(cell) =
          Eigen::RowVectorXd::Constant(k, mean[cell]) + zp.row(cell) * w;
    }
  };

  int zone_id = 0;
  for (const Zone& zone : layout.zones) {
    std::unordered_set<int> window(zone.window.begin(), zone.window.end());
    std::vector<int> local_obs;
    for (int j = 0; j < spec.size(); ++j) {
      if (window.count(spec.indices[j])) local_obs.push_back(j);
    }
    analyze(zone.center, local_obs, zone_id++);
  }

  if (has_velocity) {
    // the scalar velocity has no angular position; it sees all observations
    std::vector<int> all_obs(spec.size());
    for (int j = 0; j < spec.size(); ++j) all_obs[j] = j;
    analyze({layout.ring_size}, all_obs, zone_id);
  }

  return Ensemble(std::move(analysis));
}

}  // namespace loopda
