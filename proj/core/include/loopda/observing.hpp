/*
 * (C) Copyright 2026 loopda developers.
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "loopda/rng.hpp"
#include "loopda/types.hpp"

namespace loopda {

/// Which state components are observed and with what error.
struct ObsSpec {
  std::vector<int> indices;  // strictly increasing
  Vector sigma;              // per-component observation-error std, > 0

  int size() const { return static_cast<int>(indices.size()); }
};

/// ObsSpec observing every `spacing`-th component of a dim-sized state
/// with a common error std.
ObsSpec make_obs_spec(int dim, int spacing, double sigma);

struct ObservationBatch {
  double time = 0.0;
  Vector values;
  ObsSpec spec;
};

/// The linear observation operator: a pure gather over observed indices.
Vector apply_h(const ObsSpec& spec, const Vector& x);

/// H(truth) + N(0, sigma^2) i.i.d., deterministic given (seed, stream).
ObservationBatch synthesize_obs(const ObsSpec& spec, const Vector& truth,
                                double time, std::uint64_t seed,
                                std::uint64_t stream);

/// Diagonal of R = diag(sigma^2).
Vector r_diagonal(const ObsSpec& spec);

/// CSV rows "time,index,value" for replay; header included.
void write_obs_csv(std::ostream& out,
                   const std::vector<ObservationBatch>& batches);

}  // namespace loopda
