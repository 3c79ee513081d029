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

namespace {

loopda::Matrix fd_jacobian(const loopda::RhsFn& rhs, const loopda::Vector& x,
                           double h = 1e-5) {
  const int n = static_cast<int>(x.size());
  loopda::Matrix j(n, n);
  for (int c = 0; c < n; ++c) {
    loopda::Vector xp = x, xm = x;
    xp[c] += h;
    xm[c] -= h;
    j.col(c) = (rhs(xp) - rhs(xm)) / (2.0 * h);
  }
  return j;
}

loopda::Vector random_state(std::uint64_t stream, double scale = 5.0) {
  loopda::RngStream rng(31, stream);
  loopda::Vector x(3);
  for (int i = 0; i < 3; ++i) x[i] = scale * rng.normal();
  return x;
}

}  // namespace

TEST_CASE("Lorenz origin maps to zero tendency") {
  CHECK(loopda::lorenz_rhs({}, loopda::Vector::Zero(3)).cwiseAbs().maxCoeff() ==
        0.0);
}

TEST_CASE("Lorenz tendency at (1,1,1) with default parameters") {
  loopda::Vector x(3);
  x << 1.0, 1.0, 1.0;
  const loopda::Vector f = loopda::lorenz_rhs({}, x);
  CHECK(f[0] == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(f[1] == doctest::Approx(26.0).epsilon(1e-15));
  CHECK(f[2] == doctest::Approx(-5.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("Lorenz Jacobian matches central finite differences") {
  const auto rhs = loopda::lorenz_rhs_fn({});
  for (int t = 0; t < 10; ++t) {
    const loopda::Vector x = random_state(t);
    const loopda::Matrix j = loopda::lorenz_jac({}, x);
    CHECK((j - fd_jacobian(rhs, x)).cwiseAbs().maxCoeff() < 1e-6);
  }
}

TEST_CASE("wall-coupling function h values and seam match") {
  CHECK(loopda::h_eval(0.0) == 0.0);
  CHECK(loopda::h_eval(8.0) == doctest::Approx(2.0).epsilon(1e-14));
  // both branches agree at the seam: p(1) = (44-55+20)/9 = 1
  CHECK(loopda::h_eval(1.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(loopda::h_eval(1.0 - 1e-12) == doctest::Approx(1.0).epsilon(1e-9));
  // p'(1) = (88-165+80)/9 = 1/3 = d(x^{1/3})/dx at 1
  CHECK(loopda::h_prime(1.0) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(loopda::h_prime(1.0 - 1e-9) ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-6));
  CHECK(loopda::h_prime(1.0 + 1e-9) ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-6));
  CHECK_THROWS_AS((void)loopda::h_eval(-0.1), loopda::ConfigError);
  CHECK_THROWS_AS((void)loopda::h_prime(-0.1), loopda::ConfigError);
}

TEST_CASE("h_prime is the derivative of h_eval") {
  for (double x : {0.2, 0.7, 0.999, 1.001, 2.5, 10.0}) {
    const double h = 1e-6;
    const double fd = (loopda::h_eval(x + h) - loopda::h_eval(x - h)) / (2 * h);
    CHECK(loopda::h_prime(x) == doctest::Approx(fd).epsilon(1e-5));
  }
}

TEST_CASE("three-variable loop model reduces to unit-decay Lorenz at K=0") {
  loopda::EmParams em;
  em.alpha = 10.0;
  em.beta = 28.0;
  em.k_wall = 0.0;
  loopda::Lorenz63Params lz;
  lz.sigma = 10.0;
  lz.rho = 28.0;
  lz.beta = 1.0;
  for (int t = 0; t < 5; ++t) {
    const loopda::Vector x = random_state(50 + t);
    const loopda::Vector fe = loopda::em3_rhs(em, x);
    const loopda::Vector fl = loopda::lorenz_rhs(lz, x);
    CHECK((fe - fl).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("loop model origin is the conduction fixed point") {
  loopda::EmParams em;
  em.k_wall = 0.7;
  CHECK(loopda::em3_rhs(em, loopda::Vector::Zero(3)).cwiseAbs().maxCoeff() ==
        0.0);
}

TEST_CASE("loop-model Jacobian matches finite differences at the h seam") {
  loopda::EmParams em;
  em.k_wall = 0.8;
  const auto rhs = loopda::em3_rhs_fn(em);
  for (double x1 : {1.0 + 1e-3, -1.0 - 1e-3, 1.1, -1.1, 0.5, -0.5}) {
    loopda::Vector x(3);
    x << x1, 0.7, -0.4;
    const loopda::Matrix j = loopda::em3_jac(em, x);
    CHECK((j - fd_jacobian(rhs, x)).cwiseAbs().maxCoeff() < 1e-5);
  }
}

TEST_CASE("loop-model Jacobian matches finite differences at random states") {
  loopda::EmParams em;
  em.k_wall = 0.3;
  const auto rhs = loopda::em3_rhs_fn(em);
  for (int t = 0; t < 20; ++t) {
    const loopda::Vector x = random_state(80 + t);
    const loopda::Matrix j = loopda::em3_jac(em, x);
    CHECK((j - fd_jacobian(rhs, x)).cwiseAbs().maxCoeff() < 1e-5);
  }
}
