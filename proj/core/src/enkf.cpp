/*
 * (C) Copyright 2026 loopda developers.
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "loopda/filters/enkf.hpp"

#include "loopda/errors.hpp"

namespace loopda {

Ensemble enkf_analysis(const Ensemble& e, const ObservationBatch& obs,
                       const InflationParams& infl, RngStream& rng,
                       CovMode cov_mode) {
  if (e.size() < 3) {
    throw ConfigError("enkf_analysis: need K >= 3 members");
  }
  const Ensemble bg = inflate(e, infl, rng);
  const auto& spec = obs.spec;
  const int m = spec.size();

  const Matrix p = ensemble_cov(bg, cov_mode);
  Matrix pht(bg.dim(), m);
  Matrix hpht(m, m);
  for (int j = 0; j < m; ++j) pht.col(j) = p.col(spec.indices[j]);
  for (int i = 0; i < m; ++i) hpht.row(i) = pht.row(spec.indices[i]);
  hpht += Matrix(r_diagonal(spec).asDiagonal());

  Eigen::LDLT<Matrix> solver(hpht);
  if (solver.info() != Eigen::Success || !solver.isPositive()) {
    throw NumericalError("enkf: innovation covariance not positive definite");
  }
  const Matrix gain = solver.solve(pht.transpose()).transpose();

  Matrix members = bg.members();
  for (int k = 0; k < bg.size(); ++k) {
    Vector perturbed = obs.values;
    for (int i = 0; i < m; ++i) perturbed[i] += spec.sigma[i] * rng.normal();
    const Vector innovation = perturbed - apply_h(spec, members.col(k));
    members.col(k) += gain * innovation;
  }
  return Ensemble(std::move(members));
}

}  // namespace loopda
