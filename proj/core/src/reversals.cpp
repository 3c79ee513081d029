/*
 * (C) Copyright 2026 loopda developers.
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "loopda/models/reversals.hpp"

#include <cstddef>

#include "loopda/errors.hpp"

namespace loopda {

namespace {

int sign_of(double v) { return v > 0.0 ? 1 : (v < 0.0 ? -1 : 0); }

}  // namespace

std::vector<ReversalEvent> detect_reversals(const std::vector<double>& times,
                                            const std::vector<double>& values,
                                            double hold) {
  if (times.size() != values.size()) {
    throw ConfigError("detect_reversals: times/values length mismatch");
  }
  for (std::size_t i = 1; i < times.size(); ++i) {
    if (!(times[i] > times[i - 1])) {
      throw ConfigError("detect_reversals: times must be strictly increasing");
    }
  }

  std::vector<ReversalEvent> events;
  int current = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const int s = sign_of(values[i]);
    if (s == 0 || s == current) continue;
    if (current == 0) {  // establish the initial direction silently
      current = s;
      continue;
    }
    // candidate reversal at times[i]; confirm the sign holds through every
    // sample up to and including the first one at or past times[i] + hold
    const double deadline = times[i] + hold;
    bool confirmed = false;
    for (std::size_t j = i; j < values.size(); ++j) {
      if (sign_of(values[j]) != s) break;
      if (times[j] >= deadline) {
        confirmed = true;
        break;
      }
    }
    if (confirmed) {
      events.push_back({times[i], s > 0 ? FlowDirection::ToClockwise
                                        : FlowDirection::ToCounterclockwise});
      current = s;
    }
  }
  return events;
}

}  // namespace loopda
