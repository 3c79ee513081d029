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

/// Deterministic square-root analysis in the K-dimensional ensemble
/// subspace: eigendecompose Z^T H^T R^-1 H Z, transform the perturbations
/// with the symmetric inverse root of (I + S), and update the mean with
/// the subspace gain. No perturbed observations.
Ensemble etkf_analysis(const Ensemble& e, const ObservationBatch& obs,
                       const InflationParams& infl, RngStream& rng);

}  // namespace loopda
