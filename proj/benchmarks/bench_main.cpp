/*
 * (C) Copyright 2026 loopda developers.
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include <benchmark/benchmark.h>

#include <vector>

#include "loopda/dmd.hpp"
#include "loopda/filters/ensemble.hpp"
#include "loopda/filters/etkf.hpp"
#include "loopda/filters/letkf.hpp"
#include "loopda/localization.hpp"
#include "loopda/models/ring.hpp"
#include "loopda/observing.hpp"
#include "loopda/rng.hpp"
#include "loopda/stepper.hpp"

namespace {

using loopda::Matrix;
using loopda::Vector;

Vector ring_state(const loopda::RingParams& p, std::uint64_t stream) {
  loopda::RngStream rng(1, stream);
  Vector x(p.dim());
  for (int i = 0; i < p.n_cells; ++i) {
    x[i] = p.wall_profile[i] + 0.05 * rng.normal();
  }
  x[p.n_cells] = 0.1 + 0.01 * rng.normal();
  return x;
}

loopda::Ensemble ring_ensemble(const loopda::RingParams& p, int k) {
  Matrix members(p.dim(), k);
  for (int c = 0; c < k; ++c) members.col(c) = ring_state(p, 10 + c);
  return loopda::Ensemble(members);
}

loopda::ObservationBatch ring_obs(const loopda::RingParams& p, int spacing) {
  const auto spec = loopda::make_obs_spec(p.n_cells, spacing, 0.05);
  return loopda::synthesize_obs(spec, ring_state(p, 99), 0.0, 7, 3);
}

void bm_ring_rhs(benchmark::State& state) {
  const auto p = loopda::ring_chaotic_params(int(state.range(0)));
  const Vector x = ring_state(p, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(loopda::ring_rhs(p, x));
  }
}
BENCHMARK(bm_ring_rhs)->Arg(64)->Arg(200);

void bm_ring_step_window(benchmark::State& state) {
  const auto p = loopda::ring_chaotic_params(100);
  const auto rhs = loopda::ring_rhs_fn(p);
  const loopda::StepperSpec spec{loopda::Scheme::Rk4, 0.02};
  const Vector x0 = ring_state(p, 1);
  for (auto _ : state) {
    Vector x = x0;
    for (int s = 0; s < 500; ++s) x = loopda::step(rhs, spec, x);
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(bm_ring_step_window);

void bm_etkf_analysis(benchmark::State& state) {
  const auto p = loopda::ring_chaotic_params(100);
  const auto ens = ring_ensemble(p, int(state.range(0)));
  const auto obs = ring_obs(p, 2);
  for (auto _ : state) {
    loopda::RngStream rng(1, 1);
    benchmark::DoNotOptimize(loopda::etkf_analysis(ens, obs, {}, rng));
  }
}
BENCHMARK(bm_etkf_analysis)->Arg(10)->Arg(20)->Arg(40);

void bm_letkf_analysis(benchmark::State& state) {
  const auto p = loopda::ring_chaotic_params(100);
  const auto ens = ring_ensemble(p, 20);
  const auto obs = ring_obs(p, 2);
  const auto layout =
      loopda::build_zones(p.n_cells, int(state.range(0)), int(state.range(0)));
  for (auto _ : state) {
    loopda::RngStream rng(1, 1);
    benchmark::DoNotOptimize(
        loopda::letkf_analysis(ens, obs, layout, {}, rng));
  }
}
BENCHMARK(bm_letkf_analysis)->Arg(4)->Arg(10)->Arg(25);

void bm_dmd_standard(benchmark::State& state) {
  const auto p = loopda::ring_chaotic_params(int(state.range(0)));
  const auto rhs = loopda::ring_rhs_fn(p);
  const loopda::StepperSpec spec{loopda::Scheme::Rk4, 0.02};
  loopda::SnapshotMatrix snaps;
  snaps.interval = 10.0;
  snaps.data.resize(p.dim(), 91);
  Vector x = ring_state(p, 1);
  for (int j = 0; j < snaps.data.cols(); ++j) {
    snaps.data.col(j) = x;
    for (int s = 0; s < 500; ++s) x = loopda::step(rhs, spec, x);
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(loopda::dmd_standard(snaps));
  }
}
BENCHMARK(bm_dmd_standard)->Arg(64)->Arg(200);

}  // namespace

BENCHMARK_MAIN();
