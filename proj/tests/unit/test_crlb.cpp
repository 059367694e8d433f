// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>

#include "wetbeam/angles.hpp"
#include "wetbeam/codebook.hpp"
#include "wetbeam/crlb.hpp"
#include "wetbeam/errors.hpp"
#include "wetbeam/rng.hpp"

using namespace wetbeam;

namespace {

Eigen::Matrix3d to_eigen(const FimMatrix& m) {
  Eigen::Matrix3d e;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      e(r, c) = m(r, c);
    }
  }
  return e;
}

// Random phase set with a minimum pairwise gap, so the inversion oracle
// stays well conditioned.
PhaseSet random_gapped_set(std::size_t n, RngStream& rng, double min_gap) {
  for (;;) {
    const PhaseSet set = random_phase_set(n, rng);
    bool ok = true;
    for (std::size_t i = 0; ok && i + 1 < n; ++i) {
      for (std::size_t j = i + 1; ok && j < n; ++j) {
        ok = std::abs(wrap_angle(set.theta(i) - set.theta(j))) >= min_gap;
      }
    }
    if (ok) {
      return set;
    }
  }
}

}  // namespace

TEST_CASE("delta_ijk evaluates the triple-sine factor") {
  CHECK(delta_ijk(0.0, kTwoPi / 3.0, 2.0 * kTwoPi / 3.0) ==
        doctest::Approx(27.0 / 4.0).epsilon(1e-14));
  CHECK(delta_ijk(0.0, 0.0, kPi) == 0.0);
  CHECK(delta_ijk(0.0, kPi / 2.0, kPi) == doctest::Approx(4.0).epsilon(1e-14));
  // Coincidence mod 2pi also vanishes.
  CHECK(delta_ijk(0.3, 0.3 + kTwoPi, 2.0) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK_THROWS_AS(delta_ijk(0.0, INFINITY, 1.0), std::invalid_argument);

  RngStream rng(31, 3);
  for (int i = 0; i < 200; ++i) {
    CHECK(delta_ijk(kTwoPi * rng.next_uniform(), kTwoPi * rng.next_uniform(),
                    kTwoPi * rng.next_uniform()) >= 0.0);
  }
}

TEST_CASE("fim matches the Jacobian structure") {
  SUBCASE("N = 1 is the rank-one outer product") {
    const PairParams p{2.0, 0.7, 0.4};
    const double s2 = 1.7;
    const FimMatrix m = fim(p, PhaseSet({1.1}), s2);
    const double a = std::cos(1.1 + p.phi);
    const double d = -p.beta * std::sin(1.1 + p.phi);
    CHECK(m(0, 0) == doctest::Approx(1.0 / s2));
    CHECK(m(0, 1) == doctest::Approx(a / s2));
    CHECK(m(0, 2) == doctest::Approx(d / s2));
    CHECK(m(1, 1) == doctest::Approx(a * a / s2));
    CHECK(m(1, 2) == doctest::Approx(a * d / s2));
    CHECK(m(2, 2) == doctest::Approx(d * d / s2));
    CHECK(std::abs(to_eigen(m).determinant()) < 1e-12);
  }
  SUBCASE("N = 2 is singular, N >= 3 distinct is not") {
    const PairParams p{1.5, 1.0, -0.9};
    CHECK(std::abs(to_eigen(fim(p, PhaseSet({0.0, 2.0}), 1.0)).determinant()) < 1e-12);
    CHECK(to_eigen(fim(p, make_theta(3), 1.0)).determinant() > 0.1);
  }
  SUBCASE("uniform N = 3 determinant equals beta^2 sum(delta) / sigma^6") {
    for (const double s2 : {1.0, 2.0, 0.5}) {
      for (const double beta : {1.0, 0.3}) {
        const PairParams p{1.0, beta, 0.77};
        const double det = to_eigen(fim(p, make_theta(3), s2)).determinant();
        const double expected = beta * beta * (27.0 / 4.0) / (s2 * s2 * s2);
        CHECK(det == doctest::Approx(expected).epsilon(1e-11));
      }
    }
  }
  SUBCASE("entries agree with central-difference derivatives of the curve") {
    const PairParams p{1.8, 0.9, 1.3};
    RngStream rng(41, 3);
    const PhaseSet thetas = random_gapped_set(6, rng, 0.05);
    const double h = 1e-6;
    for (std::size_t n = 0; n < thetas.size(); ++n) {
      const double t = thetas.theta(n);
      const auto curve = [&](double alpha, double beta, double phi) {
        return alpha + beta * std::cos(t + phi);
      };
      const double da =
          (curve(p.alpha + h, p.beta, p.phi) - curve(p.alpha - h, p.beta, p.phi)) /
          (2.0 * h);
      const double db =
          (curve(p.alpha, p.beta + h, p.phi) - curve(p.alpha, p.beta - h, p.phi)) /
          (2.0 * h);
      const double dp =
          (curve(p.alpha, p.beta, p.phi + h) - curve(p.alpha, p.beta, p.phi - h)) /
          (2.0 * h);
      CHECK(da == doctest::Approx(1.0).epsilon(1e-6));
      CHECK(db == doctest::Approx(std::cos(t + p.phi)).epsilon(1e-6));
      CHECK(std::abs(dp - (-p.beta * std::sin(t + p.phi))) < 1e-6);
    }
  }
  SUBCASE("symmetric and positive semi-definite") {
    RngStream rng(13, 3);
    for (int i = 0; i < 50; ++i) {
      const PairParams p{1.0, 0.2 + 2.0 * rng.next_uniform(),
                         wrap_angle(kTwoPi * rng.next_uniform())};
      const FimMatrix m =
          fim(p, random_phase_set(3 + (i % 8), rng), 0.5 + rng.next_uniform());
      const Eigen::Matrix3d e = to_eigen(m);
      CHECK((e - e.transpose()).norm() == 0.0);
      Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> solver(e);
      CHECK(solver.eigenvalues().minCoeff() > -1e-9 * e.norm());
    }
  }
  SUBCASE("noise variance must be positive") {
    CHECK_THROWS_AS(fim(PairParams{1, 1, 0}, make_theta(3), 0.0),
                    std::invalid_argument);
  }
}

TEST_CASE("crlb_phi equals the numeric FIM inverse") {
  RngStream rng(101, 3);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = 3 + static_cast<std::size_t>(10.0 * rng.next_uniform());
    const PhaseSet thetas = random_gapped_set(n, rng, 0.02);
    const double beta = 0.5 + 1.5 * rng.next_uniform();
    const double phi = wrap_angle(kTwoPi * rng.next_uniform());
    const double s2 = 0.5 + 1.5 * rng.next_uniform();
    const PairParams p{beta, beta, phi};
    const double closed = crlb_phi(p, thetas, s2);
    const double inverse = to_eigen(fim(p, thetas, s2)).inverse()(2, 2);
    worst = std::max(worst, std::abs(closed - inverse) / inverse);
  }
  CHECK(worst < 1e-8);
}

TEST_CASE("crlb_phi rejects unbounded setups") {
  const PairParams p{1.0, 1.0, 0.3};
  CHECK_THROWS_AS(crlb_phi(p, PhaseSet({0.0, 1.0}), 1.0), CrlbUnboundedError);
  CHECK_THROWS_AS(crlb_phi(p, PhaseSet({0.0, 1.0, 1.0}), 1.0), CrlbUnboundedError);
  CHECK_THROWS_AS(crlb_phi(PairParams{1.0, 0.0, 0.3}, make_theta(3), 1.0),
                  CrlbUnboundedError);
  CHECK_THROWS_AS(crlb_phi(p, make_theta(4), -1.0), std::invalid_argument);
}

TEST_CASE("mcrlb closed form") {
  SUBCASE("uniform grid anchors") {
    CHECK(mcrlb(make_theta(3), 1.0, 1.0) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(mcrlb(make_theta(4), 1.0, 1.0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(mcrlb(make_theta(8), 1.0, 1.0) == doctest::Approx(0.25).epsilon(1e-12));
  }
  SUBCASE("uniform grid equals 2 sigma^2 / (N beta^2) for N up to 64") {
    const double beta = 1.7;
    const double s2 = 0.3;
    for (std::size_t n = 3; n <= 64; ++n) {
      const double expected = 2.0 * s2 / (static_cast<double>(n) * beta * beta);
      CHECK(mcrlb(make_theta(n), beta, s2) ==
            doctest::Approx(expected).epsilon(1e-9));
    }
  }
  SUBCASE("uniform N = 3 phase average of crlb_phi recovers 2/3") {
    double avg = 0.0;
    const int grid = 10000;
    for (int g = 0; g < grid; ++g) {
      const double phi = wrap_angle(kTwoPi * (g + 0.5) / grid);
      avg += crlb_phi(PairParams{1.0, 1.0, phi}, make_theta(3), 1.0);
    }
    CHECK(avg / grid == doctest::Approx(2.0 / 3.0).epsilon(1e-3));
  }
  SUBCASE("equals the numeric phase average of crlb_phi") {
    RngStream rng(77, 3);
    for (int rep = 0; rep < 5; ++rep) {
      const std::size_t n = 3 + 2 * rep;
      const PhaseSet thetas = random_gapped_set(n, rng, 0.05);
      const double beta = 0.8;
      const double s2 = 1.3;
      double avg = 0.0;
      const int grid = 10000;
      for (int g = 0; g < grid; ++g) {
        const double phi = wrap_angle(kTwoPi * (g + 0.5) / grid);
        avg += crlb_phi(PairParams{beta, beta, phi}, thetas, s2);
      }
      avg /= grid;
      CHECK(mcrlb(thetas, beta, s2) == doctest::Approx(avg).epsilon(1e-3));
    }
  }
  SUBCASE("random grids stay above the uniform value") {
    RngStream rng(303, 3);
    for (std::size_t n = 3; n <= 16; ++n) {
      const double reference = 2.0 / static_cast<double>(n);
      for (int i = 0; i < 100; ++i) {
        const PhaseSet thetas = random_phase_set(n, rng);
        if (thetas.has_repeated_phase()) {
          continue;
        }
        CHECK(mcrlb(thetas, 1.0, 1.0) >= reference - 1e-9);
      }
    }
  }
}
