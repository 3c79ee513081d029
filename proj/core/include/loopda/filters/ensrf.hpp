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

/// Serial square-root filter: observations are assimilated one at a time
/// (diagonal R), each with a scalar gain and the Whitaker-Hamill
/// perturbation damping factor. For a single observation the posterior
/// matches the ETKF.
Ensemble ensrf_analysis(const Ensemble& e, const ObservationBatch& obs,
                        const InflationParams& infl, RngStream& rng);

}  // namespace loopda
