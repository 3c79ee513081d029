/*
 * (C) Copyright 2026 loopda developers.
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include "loopda/filters/ensrf.hpp"

#include <cmath>

#include "loopda/errors.hpp"

namespace loopda {

Ensemble ensrf_analysis(const Ensemble& e, const ObservationBatch& obs,
                        const InflationParams& infl, RngStream& rng) {
  const Ensemble bg = inflate(e, infl, rng);
  const auto& spec = obs.spec;
  const int k = bg.size();

  Vector mean = bg.mean();
  Matrix z = bg.perturbations();
  const Vector rdiag = r_diagonal(spec);

  for (int j = 0; j < spec.size(); ++j) {
    const int idx = spec.indices[j];
    const Eigen::RowVectorXd hz = z.row(idx);
    const double s = hz.squaredNorm() / (k - 1) + rdiag[j];
    if (!(s > 0.0)) {
      throw NumericalError("ensrf: singular innovation variance");
    }
    const Vector pht = z * hz.transpose() / (k - 1);
    const Vector gain = pht / s;
    mean += gain * (obs.values[j] - mean[idx]);
    const double damp = 1.0 / (1.0 + std::sqrt(rdiag[j] / s));
    z -= damp * gain * hz;
  }

  Matrix members(bg.dim(), k);
  for (int c = 0; c < k; ++c) members.col(c) = mean + z.col(c);
  return Ensemble(std::move(members));
}

}  // namespace loopda
