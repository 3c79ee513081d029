/*
 * (C) Copyright 2026 loopda developers.
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "loopda/observing.hpp"

#include <ostream>
#include <string>

#include "loopda/errors.hpp"

namespace loopda {

namespace {

void check_spec(const ObsSpec& spec) {
  if (spec.indices.empty()) {
    throw ConfigError("ObsSpec: no observed indices");
  }
  for (std::size_t i = 1; i < spec.indices.size(); ++i) {
    if (spec.indices[i] <= spec.indices[i - 1]) {
      throw ConfigError("ObsSpec: indices must be strictly increasing");
    }
  }
  if (spec.sigma.size() != spec.size()) {
    throw ConfigError("ObsSpec: sigma length does not match indices");
  }
  if ((spec.sigma.array() <= 0.0).any()) {
    throw ConfigError("ObsSpec: noise sigma must be positive");
  }
}

}  // namespace

ObsSpec make_obs_spec(int dim, int spacing, double sigma) {
  if (spacing < 1) throw ConfigError("make_obs_spec: spacing must be >= 1");
  ObsSpec spec;
  for (int i = 0; i < dim; i += spacing) spec.indices.push_back(i);
  spec.sigma = Vector::Constant(spec.size(), sigma);
  return spec;
}

Vector apply_h(const ObsSpec& spec, const Vector& x) {
  Vector y(spec.size());
  for (int i = 0; i < spec.size(); ++i) {
    const int idx = spec.indices[i];
    if (idx < 0 || idx >= x.size()) {
      throw ConfigError("apply_h: observed index " + std::to_string(idx) +
                        " out of range for dimension " +
                        std::to_string(x.size()));
    }
    y[i] = x[idx];
  }
  return y;
}

ObservationBatch synthesize_obs(const ObsSpec& spec, const Vector& truth,
                                double time, std::uint64_t seed,
                                std::uint64_t stream) {
  check_spec(spec);
  ObservationBatch batch;
  batch.time = time;
  batch.spec = spec;
  batch.values = apply_h(spec, truth);
  for (int i = 0; i < spec.size(); ++i) {
    batch.values[i] += spec.sigma[i] * rng_normal(seed, stream, i);
  }
  return batch;
}

Vector r_diagonal(const ObsSpec& spec) {
  check_spec(spec);
  return spec.sigma.array().square();
}

void write_obs_csv(std::ostream& out,
                   const std::vector<ObservationBatch>& batches) {
  out << "time,index,value\n";
  for (const auto& b : batches) {
    for (int i = 0; i < b.spec.size(); ++i) {
      out << b.time << ',' << b.spec.indices[i] << ',' << b.values[i] << '\n';
    }
  }
}

}  // namespace loopda
