/*
 * (C) Copyright 2026 loopda developers.
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#pragma once

#include "loopda/types.hpp"

namespace loopda {

/// Thin SVD X = U diag(S) V^T with singular values descending.
struct SvdResult {
  Matrix u;
  Vector s;
  Matrix v;
};

/// Symmetric eigendecomposition, eigenvalues ascending, eigenvectors
/// in columns.
struct SymEig {
  Vector values;
  Matrix vectors;
};

SvdResult svd(const Matrix& x);

/// Requires a symmetric input (checked to 1e-12 relative tolerance).
SymEig sym_eig(const Matrix& a);

/// Unique symmetric PSD square root. Eigenvalues below -1e-10 raise
/// NumericalError; small negatives are clipped to zero.
Matrix sym_sqrt(const Matrix& a);

/// Moore-Penrose pseudoinverse via SVD, singular values below
/// tol * s_max treated as zero.
Matrix pinv(const Matrix& a, double tol = 1e-12);

}  // namespace loopda
