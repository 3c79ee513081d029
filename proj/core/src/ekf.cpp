/*
 * (C) Copyright 2026 loopda developers.
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "loopda/filters/ekf.hpp"

#include <string>

namespace loopda {

GaussianBelief ekf_cycle(const GaussianBelief& belief, const RhsFn& rhs,
                         const JacFn& jac, const StepperSpec& spec,
                         int n_steps, const ObservationBatch& obs,
                         const Matrix& q, double trace_cap) {
  Vector x = belief.mean;
  Matrix p = belief.cov;
  for (int s = 0; s < n_steps; ++s) {
    const Matrix l = tlm_matrix(rhs, jac, spec, x);
    x = step(rhs, spec, x);
    p = l * p * l.transpose();
    if (trace_cap > 0.0 && p.trace() > trace_cap) {
      throw DivergenceError("ekf: forecast covariance trace " +
                            std::to_string(p.trace()) + " exceeds cap");
    }
  }
  p += q;

  const auto& obspec = obs.spec;
  const int m = obspec.size();
  Matrix pht(x.size(), m);
  Matrix hpht(m, m);
  for (int j = 0; j < m; ++j) pht.col(j) = p.col(obspec.indices[j]);
  for (int i = 0; i < m; ++i) hpht.row(i) = pht.row(obspec.indices[i]);
  hpht += Matrix(r_diagonal(obspec).asDiagonal());

  Eigen::LDLT<Matrix> solver(hpht);
  if (solver.info() != Eigen::Success || !solver.isPositive()) {
    throw NumericalError("ekf: innovation covariance not positive definite");
  }
  const Matrix gain = solver.solve(pht.transpose()).transpose();
  const Vector innovation = obs.values - apply_h(obspec, x);

  GaussianBelief out;
  out.mean = x + gain * innovation;
  Matrix ikh = Matrix::Identity(x.size(), x.size());
  for (int j = 0; j < m; ++j) ikh.col(obspec.indices[j]) -= gain.col(j);
  out.cov = ikh * p;
  // keep the analysis covariance numerically symmetric
  out.cov = 0.5 * (out.cov + out.cov.transpose());
  return out;
}

}  // namespace loopda
