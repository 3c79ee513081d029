/*
 * (C) Copyright 2026 loopda developers.
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#pragma once

#include "loopda/filters/ensemble.hpp"
#include "loopda/observing.hpp"

namespace loopda {

/// Perturbed-observation ensemble Kalman analysis: each member assimilates
/// y + eta_k with eta_k ~ N(0, R); the gain comes from the inflated
/// ensemble covariance. Requires K >= 3.
Ensemble enkf_analysis(const Ensemble& e, const ObservationBatch& obs,
                       const InflationParams& infl, RngStream& rng,
                       CovMode cov_mode = CovMode::Standard);

}  // namespace loopda
