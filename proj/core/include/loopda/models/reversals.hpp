/*
 * (C) Copyright 2026 loopda developers.
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#pragma once

#include <vector>

namespace loopda {

enum class FlowDirection { ToClockwise, ToCounterclockwise };

struct ReversalEvent {
  double time = 0.0;
  FlowDirection direction = FlowDirection::ToClockwise;
};

/// Scans a signed time series (positive = clockwise flow) and records a
/// reversal at the first sign change that persists for at least `hold`
/// time units. Consecutive events alternate direction by construction.
std::vector<ReversalEvent> detect_reversals(const std::vector<double>& times,
                                            const std::vector<double>& values,
                                            double hold);

}  // namespace loopda
