/*
 * (C) Copyright 2026 loopda developers.
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include <doctest.h>

#include <cmath>

#include "loopda/errors.hpp"
#include "loopda/models/em3.hpp"
#include "loopda/models/lorenz63.hpp"
#include "loopda/rng.hpp"
#include "loopda/stepper.hpp"

namespace {

loopda::Vector attractor_point(const loopda::RhsFn& rhs, std::uint64_t stream) {
  loopda::RngStream rng(7, stream);
  loopda::Vector x(3);
  for (int i = 0; i < 3; ++i) x[i] = 1.0 + rng.normal();
  const loopda::StepperSpec spec{loopda::Scheme::Rk4, 0.01};
  for (int s = 0; s < 500; ++s) x = loopda::step(rhs, spec, x);
  return x;
}

/// Mean ratio of Taylor remainders ||M(x+d) - M(x) - L d|| when the
/// perturbation is halved; 4 for an exact second-order-accurate TLM.
double taylor_ratio(const loopda::RhsFn& rhs, const loopda::JacFn& jac) {
  const loopda::StepperSpec spec{loopda::Scheme::Rk4, 0.01};
  double sum = 0.0;
  const int n_points = 20;
  for (int t = 0; t < n_points; ++t) {
    const loopda::Vector x = attractor_point(rhs, 100 + t);
    loopda::RngStream rng(11, 200 + t);
    loopda::Vector dir(3);
    for (int i = 0; i < 3; ++i) dir[i] = rng.normal();
    dir.normalize();
    const loopda::Matrix l = loopda::tlm_matrix(rhs, jac, spec, x);
    const loopda::Vector base = loopda::step(rhs, spec, x);
    auto remainder = [&](double eps) {
      const loopda::Vector d = eps * dir;
      return (loopda::step(rhs, spec, x + d) - base - l * d).norm();
    };
    const double eps = 1e-3;
    sum += remainder(eps) / remainder(eps / 2.0);
  }
  return sum / n_points;
}

}  // namespace

TEST_CASE("step leaves state unchanged under a zero field") {
  const loopda::RhsFn zero = [](const loopda::Vector& x) {
    return loopda::Vector(loopda::Vector::Zero(x.size()));
  };
  loopda::Vector x(3);
  x << 1.5, -2.0, 0.25;
  const loopda::StepperSpec spec{loopda::Scheme::Rk4, 0.1};
  CHECK((loopda::step(zero, spec, x) - x).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("RK4 on dx/dt = x reproduces the 4-term exponential series") {
  const loopda::RhsFn rhs = [](const loopda::Vector& x) {
    return loopda::Vector(x);
  };
  loopda::Vector x(1);
  x << 1.0;
  const loopda::StepperSpec spec{loopda::Scheme::Rk4, 0.1};
  const double h = 0.1;
  const double series = 1.0 + h + h * h / 2 + h * h * h / 6 + h * h * h * h / 24;
  CHECK(loopda::step(rhs, spec, x)[0] == doctest::Approx(series).epsilon(1e-15));
}

TEST_CASE("RK2 on dx/dt = x reproduces the 3-term series") {
  const loopda::RhsFn rhs = [](const loopda::Vector& x) {
    return loopda::Vector(x);
  };
  loopda::Vector x(1);
  x << 1.0;
  const loopda::StepperSpec spec{loopda::Scheme::Rk2, 0.1};
  CHECK(loopda::step(rhs, spec, x)[0] ==
        doctest::Approx(1.105).epsilon(1e-15));
}

TEST_CASE("Lorenz origin is a fixed point of the discrete step") {
  const auto rhs = loopda::lorenz_rhs_fn({});
  const loopda::StepperSpec spec{loopda::Scheme::Rk4, 0.01};
  const loopda::Vector x = loopda::Vector::Zero(3);
  CHECK(loopda::step(rhs, spec, x).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("step raises a numerical error naming the bad component") {
  const loopda::RhsFn rhs = [](const loopda::Vector& x) {
    loopda::Vector f = x;
    f[1] = std::numeric_limits<double>::quiet_NaN();
    return f;
  };
  loopda::Vector x(3);
  x << 1.0, 1.0, 1.0;
  const loopda::StepperSpec spec{loopda::Scheme::Rk4, 0.01};
  try {
    (void)loopda::step(rhs, spec, x);
    FAIL("expected NumericalError");
  } catch (const loopda::NumericalError& e) {
    CHECK(std::string(e.what()).find("1") != std::string::npos);
  }
}

TEST_CASE("tlm equals the discrete propagator for a linear field") {
  loopda::Matrix a(3, 3);
  a << -1.0, 0.5, 0.0, 0.2, -0.7, 0.1, 0.0, 0.3, -0.4;
  const loopda::RhsFn rhs = [a](const loopda::Vector& x) {
    return loopda::Vector(a * x);
  };
  const loopda::JacFn jac = [a](const loopda::Vector&) { return a; };
  const loopda::StepperSpec spec{loopda::Scheme::Rk4, 0.05};
  loopda::Vector x(3), p(3);
  x << 1.0, 2.0, -1.0;
  p << 0.3, -0.2, 0.5;
  const loopda::Vector lp = loopda::tlm_step(rhs, jac, spec, x, p);
  // for a linear field the step map itself is linear, so L p = step(p)
  const loopda::Vector sp = loopda::step(rhs, spec, p);
  CHECK((lp - sp).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("tlm matches a machine-small finite difference on Lorenz") {
  const auto rhs = loopda::lorenz_rhs_fn({});
  const auto jac = loopda::lorenz_jac_fn({});
  const loopda::StepperSpec spec{loopda::Scheme::Rk4, 0.01};
  const loopda::Vector x = attractor_point(rhs, 5);
  loopda::Vector d = loopda::Vector::Zero(3);
  d[0] = 1e-6;
  const loopda::Matrix l = loopda::tlm_matrix(rhs, jac, spec, x);
  const loopda::Vector fd =
      loopda::step(rhs, spec, x + d) - loopda::step(rhs, spec, x);
  CHECK((fd - l * d).norm() <= 1e-10);
}

TEST_CASE("halving the perturbation quarters the Taylor remainder") {
  const double lorenz_ratio =
      taylor_ratio(loopda::lorenz_rhs_fn({}), loopda::lorenz_jac_fn({}));
  CHECK(lorenz_ratio > 3.5);
  CHECK(lorenz_ratio < 4.5);

  loopda::EmParams em;
  em.k_wall = 0.5;
  const double em_ratio =
      taylor_ratio(loopda::em3_rhs_fn(em), loopda::em3_jac_fn(em));
  CHECK(em_ratio > 3.5);
  CHECK(em_ratio < 4.5);
}

TEST_CASE("tlm_step rejects shape mismatches") {
  const auto rhs = loopda::lorenz_rhs_fn({});
  const auto jac = loopda::lorenz_jac_fn({});
  const loopda::StepperSpec spec{loopda::Scheme::Rk4, 0.01};
  loopda::Vector x(3);
  x << 1.0, 1.0, 1.0;
  const loopda::Matrix p = loopda::Matrix::Identity(4, 4);
  CHECK_THROWS_AS((void)loopda::tlm_step(rhs, jac, spec, x, p),
                  loopda::ConfigError);
}

TEST_CASE("step is bitwise deterministic") {
  const auto rhs = loopda::lorenz_rhs_fn({});
  const loopda::StepperSpec spec{loopda::Scheme::Rk4, 0.01};
  const loopda::Vector x = attractor_point(rhs, 9);
  const loopda::Vector a = loopda::step(rhs, spec, x);
  const loopda::Vector b = loopda::step(rhs, spec, x);
  CHECK((a - b).cwiseAbs().maxCoeff() == 0.0);
}
