/*
 * (C) Copyright 2026 loopda developers.
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "loopda/filters/threedvar.hpp"

#include "loopda/errors.hpp"
#include "loopda/linalg.hpp"

namespace loopda {

Vector threedvar_analysis(const Vector& background, const Matrix& b,
                          const ObservationBatch& obs) {
  const auto& spec = obs.spec;
  const int m = spec.size();
  // BH^T and HBH^T by gathering rows/columns of B
  Matrix bht(background.size(), m);
  Matrix hbht(m, m);
  for (int j = 0; j < m; ++j) bht.col(j) = b.col(spec.indices[j]);
  for (int i = 0; i < m; ++i) hbht.row(i) = bht.row(spec.indices[i]);
  hbht += Matrix(r_diagonal(spec).asDiagonal());

  SymEig e = sym_eig(hbht);
  if (e.values.minCoeff() <= 0.0 ||
      e.values.minCoeff() < 1e-14 * e.values.maxCoeff()) {
    throw NumericalError("threedvar: innovation covariance ill-conditioned");
  }
  const Vector innovation = obs.values - apply_h(spec, background);
  const Vector w = e.vectors *
                   (e.vectors.transpose() * innovation).cwiseQuotient(e.values);
  return background + bht * w;
}

}  // namespace loopda
