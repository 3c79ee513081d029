/*
 * (C) Copyright 2026 loopda developers.
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

#include <doctest.h>

#include <cmath>

#include "loopda/errors.hpp"
#include "loopda/filters/ensemble.hpp"

namespace {

loopda::Ensemble random_ensemble(int dim, int k, std::uint64_t stream) {
  loopda::RngStream rng(17, stream);
  loopda::Matrix m(dim, k);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < k; ++j) m(i, j) = rng.normal();
  }
  return loopda::Ensemble(m);
}

}  // namespace

TEST_CASE("identical members give a zero covariance in both modes") {
  loopda::Matrix m(2, 4);
  m.colwise() = loopda::Vector(loopda::Vector::Constant(2, 3.5));
  const loopda::Ensemble e(m);
  CHECK(loopda::ensemble_cov(e, loopda::CovMode::Standard)
            .cwiseAbs()
            .maxCoeff() == 0.0);
  CHECK(loopda::ensemble_cov(e, loopda::CovMode::LeaveOneOut)
            .cwiseAbs()
            .maxCoeff() == 0.0);
}

TEST_CASE("scalar three-member ensemble reproduces both hand estimates") {
  loopda::Matrix m(1, 3);
  m << 0.0, 1.0, 2.0;
  const loopda::Ensemble e(m);
  CHECK(loopda::ensemble_cov(e, loopda::CovMode::Standard)(0, 0) ==
        doctest::Approx(1.0).epsilon(1e-14));
  // leave-one-out means are 1.5, 1.0, 0.5; squared deviations sum to 4.5
  CHECK(loopda::ensemble_cov(e, loopda::CovMode::LeaveOneOut)(0, 0) ==
        doctest::Approx(4.5).epsilon(1e-14));
}

TEST_CASE("standard mode equals the brute-force sample covariance") {
  const auto e = random_ensemble(4, 6, 1);
  const loopda::Matrix cov = loopda::ensemble_cov(e);
  const loopda::Vector mean = e.mean();
  loopda::Matrix brute = loopda::Matrix::Zero(4, 4);
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      for (int k = 0; k < 6; ++k) {
        brute(a, b) += (e.member(k)[a] - mean[a]) * (e.member(k)[b] - mean[b]);
      }
      brute(a, b) /= 5.0;
    }
  }
  CHECK((cov - brute).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("leave-one-out needs at least three members") {
  const auto e = random_ensemble(2, 2, 2);
  CHECK_THROWS_AS(
      (void)loopda::ensemble_cov(e, loopda::CovMode::LeaveOneOut),
      loopda::ConfigError);
}

TEST_CASE("ensembles need at least two members") {
  loopda::Matrix m(3, 1);
  m.setZero();
  CHECK_THROWS_AS(loopda::Ensemble{m}, loopda::ConfigError);
}

TEST_CASE("perturbations sum to zero") {
  const auto e = random_ensemble(3, 5, 3);
  CHECK(e.perturbations().rowwise().sum().cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("unit inflation is the identity") {
  const auto e = random_ensemble(3, 5, 4);
  loopda::RngStream rng(1, 1);
  const auto out = loopda::inflate(e, {1.0, 0.0, 1.0}, rng);
  CHECK((out.members() - e.members()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("multiplicative inflation scales covariance by the square") {
  const auto e = random_ensemble(3, 6, 5);
  loopda::RngStream rng(1, 2);
  const auto out = loopda::inflate(e, {1.2, 0.0, 1.0}, rng);
  const loopda::Matrix before = loopda::ensemble_cov(e);
  const loopda::Matrix after = loopda::ensemble_cov(out);
  CHECK((after - 1.44 * before).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((out.mean() - e.mean()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("additive inflation restores the advertised variance") {
  const int k = 10000;
  loopda::Matrix m = loopda::Matrix::Zero(1, k);  // zero-spread ensemble
  const loopda::Ensemble e(m);
  loopda::RngStream rng(1, 3);
  const auto out = loopda::inflate(e, {1.0, 0.1, 1.0}, rng);
  const double var = loopda::ensemble_cov(out)(0, 0);
  CHECK(std::abs(var - 0.01) < 0.0003);
}

TEST_CASE("inflation parameters are validated") {
  const auto e = random_ensemble(2, 4, 6);
  loopda::RngStream rng(1, 4);
  CHECK_THROWS_AS((void)loopda::inflate(e, {0.9, 0.0, 1.0}, rng),
                  loopda::ConfigError);
  CHECK_THROWS_AS((void)loopda::inflate(e, {1.0, -0.1, 1.0}, rng),
                  loopda::ConfigError);
  CHECK_THROWS_AS((void)loopda::inflate(e, {1.0, 0.0, 0.5}, rng),
                  loopda::ConfigError);
}
