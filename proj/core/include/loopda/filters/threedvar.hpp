/*
 * (C) Copyright 2026 loopda developers.
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#pragma once

#include "loopda/observing.hpp"
#include "loopda/types.hpp"

namespace loopda {

/// Closed-form minimizer of the variational cost:
/// x_a = x_b + B H^T (H B H^T + R)^{-1} (y - H x_b).
Vector threedvar_analysis(const Vector& background, const Matrix& b,
                          const ObservationBatch& obs);

}  // namespace loopda
