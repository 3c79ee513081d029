/*
 * (C) Copyright 2026 loopda developers.
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "loopda/linalg.hpp"

#include <string>

#include "loopda/errors.hpp"

namespace loopda {

SvdResult svd(const Matrix& x) {
  Eigen::JacobiSVD<Matrix> dec(x, Eigen::ComputeThinU | Eigen::ComputeThinV);
  return {dec.matrixU(), dec.singularValues(), dec.matrixV()};
}

SymEig sym_eig(const Matrix& a) {
  const double scale = a.cwiseAbs().maxCoeff();
  const double asym = (a - a.transpose()).cwiseAbs().maxCoeff();
  if (scale > 0.0 && asym > 1e-12 * scale) {
    throw NumericalError("sym_eig: input not symmetric, asymmetry " +
                         std::to_string(asym / scale));
  }
  Eigen::SelfAdjointEigenSolver<Matrix> dec(a);
  if (dec.info() != Eigen::Success) {
    throw NumericalError("sym_eig: eigendecomposition failed");
  }
  return {dec.eigenvalues(), dec.eigenvectors()};
}

Matrix sym_sqrt(const Matrix& a) {
  SymEig e = sym_eig(a);
  const double scale = std::max(1.0, e.values.cwiseAbs().maxCoeff());
  Vector d = e.values;
  for (Eigen::Index i = 0; i < d.size(); ++i) {
    if (d[i] < -1e-10 * scale) {
      throw NumericalError("sym_sqrt: input not PSD, eigenvalue " +
                           std::to_string(d[i]));
    }
    d[i] = d[i] > 0.0 ? std::sqrt(d[i]) : 0.0;
  }
  return e.vectors * d.asDiagonal() * e.vectors.transpose();
}

Matrix pinv(const Matrix& a, double tol) {
  SvdResult dec = svd(a);
  const double cutoff = dec.s.size() > 0 ? tol * dec.s[0] : 0.0;
  Vector inv = Vector::Zero(dec.s.size());
  for (Eigen::Index i = 0; i < dec.s.size(); ++i) {
    if (dec.s[i] > cutoff && dec.s[i] > 0.0) inv[i] = 1.0 / dec.s[i];
  }
  return dec.v * inv.asDiagonal() * dec.u.transpose();
}

}  // namespace loopda
