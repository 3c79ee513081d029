/*
 * (C) Copyright 2026 loopda developers.
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include <doctest.h>

#include <cmath>
#include <sstream>

#include "loopda/errors.hpp"
#include "loopda/observing.hpp"

TEST_CASE("full-state spec gathers the state itself") {
  const auto spec = loopda::make_obs_spec(4, 1, 0.1);
  loopda::Vector x(4);
  x << 1.0, 2.0, 3.0, 4.0;
  CHECK((loopda::apply_h(spec, x) - x).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("spacing-2 spec on a 6-dim state") {
  const auto spec = loopda::make_obs_spec(6, 2, 0.1);
  loopda::Vector x(6);
  x << 10, 11, 12, 13, 14, 15;
  const loopda::Vector y = loopda::apply_h(spec, x);
  REQUIRE(y.size() == 3);
  CHECK(y[0] == 10);
  CHECK(y[1] == 12);
  CHECK(y[2] == 14);
}

TEST_CASE("spacing-10 spec on a 200-dim ring yields 20 observations") {
  CHECK(loopda::make_obs_spec(200, 10, 0.1).size() == 20);
}

TEST_CASE("observation operator is exactly linear") {
  const auto spec = loopda::make_obs_spec(5, 2, 0.3);
  loopda::Vector x(5), y(5);
  x << 1, -2, 3, -4, 5;
  y << 0.5, 0.25, -1, 2, -3;
  const loopda::Vector lhs = loopda::apply_h(spec, 2.0 * x + 3.0 * y);
  const loopda::Vector rhs =
      2.0 * loopda::apply_h(spec, x) + 3.0 * loopda::apply_h(spec, y);
  CHECK((lhs - rhs).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("out-of-range observation index is rejected") {
  loopda::ObsSpec spec;
  spec.indices = {0, 7};
  spec.sigma = loopda::Vector::Constant(2, 0.1);
  loopda::Vector x(3);
  x << 1, 2, 3;
  CHECK_THROWS_AS((void)loopda::apply_h(spec, x), loopda::ConfigError);
}

TEST_CASE("vanishing noise reproduces the truth exactly") {
  const auto spec = loopda::make_obs_spec(3, 1, 1e-300);
  loopda::Vector x(3);
  x << 1.0, -2.0, 0.5;
  const auto batch = loopda::synthesize_obs(spec, x, 0.0, 1, 1);
  CHECK((batch.values - x).cwiseAbs().maxCoeff() < 1e-250);
}

TEST_CASE("synthesis is deterministic in (seed, stream)") {
  const auto spec = loopda::make_obs_spec(4, 1, 0.5);
  loopda::Vector x(4);
  x << 1, 2, 3, 4;
  const auto a = loopda::synthesize_obs(spec, x, 1.0, 42, 7);
  const auto b = loopda::synthesize_obs(spec, x, 1.0, 42, 7);
  CHECK((a.values - b.values).cwiseAbs().maxCoeff() == 0.0);
  const auto c = loopda::synthesize_obs(spec, x, 1.0, 42, 8);
  CHECK((a.values - c.values).cwiseAbs().maxCoeff() > 0.0);
}

TEST_CASE("observation noise has the configured standard deviation") {
  const double eps = 0.25;
  const auto spec = loopda::make_obs_spec(1, 1, eps);
  loopda::Vector x(1);
  x << 0.0;
  const int n = 100000;
  double sum2 = 0.0;
  for (int i = 0; i < n; ++i) {
    const auto batch = loopda::synthesize_obs(spec, x, 0.0, 9, i);
    sum2 += batch.values[0] * batch.values[0];
  }
  const double sample_std = std::sqrt(sum2 / n);
  CHECK(std::abs(sample_std - eps) < 0.02 * eps);
}

TEST_CASE("diagonal R is the componentwise sigma square") {
  loopda::ObsSpec spec;
  spec.indices = {0, 1, 2};
  spec.sigma.resize(3);
  spec.sigma << 0.1, 0.2, 0.5;
  const loopda::Vector r = loopda::r_diagonal(spec);
  CHECK(r[0] == doctest::Approx(0.01).epsilon(1e-15));
  CHECK(r[1] == doctest::Approx(0.04).epsilon(1e-15));
  CHECK(r[2] == doctest::Approx(0.25).epsilon(1e-15));
  // filters consume the inverse as the elementwise reciprocal
  CHECK((r.cwiseInverse().cwiseProduct(r) -
         loopda::Vector::Ones(3)).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("observation batches serialize to a replayable CSV") {
  const auto spec = loopda::make_obs_spec(3, 2, 0.1);
  loopda::Vector x(3);
  x << 1, 2, 3;
  const auto batch = loopda::synthesize_obs(spec, x, 2.5, 4, 4);
  std::ostringstream out;
  loopda::write_obs_csv(out, {batch});
  const std::string text = out.str();
  CHECK(text.rfind("time,index,value\n", 0) == 0);
  CHECK(text.find("2.5,0,") != std::string::npos);
  CHECK(text.find("2.5,2,") != std::string::npos);
}
