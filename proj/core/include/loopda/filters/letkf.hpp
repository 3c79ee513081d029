/*
 * (C) Copyright 2026 loopda developers.
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#pragma once

#include <vector>

#include "loopda/filters/ensemble.hpp"
#include "loopda/localization.hpp"
#include "loopda/observing.hpp"

namespace loopda {

struct LetkfReport {
  std::vector<int> zones_without_obs;  // fell back to background
};

/// Local ensemble transform Kalman analysis. Each zone solves in
/// ensemble-weight space using only the observations inside its window:
///   C = Y_l^T R_l^-1
///   Pa = ((k-1)I/rho + C Y_l)^-1
///   Wa = ((k-1) Pa)^{1/2}  (symmetric root)
///   wbar = Pa C (y_l - ybar_l)
/// and writes the weight update back to its center cells only. A state
/// one entry longer than layout.ring_size carries the scalar loop
/// velocity as its last component, analyzed in a dedicated zone that
/// sees every observation.
Ensemble letkf_analysis(const Ensemble& e, const ObservationBatch& obs,
                        const ZoneLayout& layout, const InflationParams& infl,
                        RngStream& rng, LetkfReport* report = nullptr);

}  // namespace loopda
