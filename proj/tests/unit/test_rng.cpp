// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "wetbeam/rng.hpp"

using namespace wetbeam;

TEST_CASE("philox4x32 reproduces the published known-answer vectors") {
  const auto zero = philox4x32({0, 0, 0, 0}, {0, 0});
  CHECK(zero[0] == 0x6627e8d5u);
  CHECK(zero[1] == 0xe169c58du);
  CHECK(zero[2] == 0xbc57ac4cu);
  CHECK(zero[3] == 0x9b00dbd8u);

  const auto ones = philox4x32({0xffffffffu, 0xffffffffu, 0xffffffffu, 0xffffffffu},
                               {0xffffffffu, 0xffffffffu});
  CHECK(ones[0] == 0x408f276du);
  CHECK(ones[1] == 0x41c83b0eu);
  CHECK(ones[2] == 0xa20bc7c6u);
  CHECK(ones[3] == 0x6d5451fdu);
}

TEST_CASE("keyed draws are pure functions of the address") {
  const RngStream s(42, 1, 7);
  CHECK(s.uniform_at(3, 9) == s.uniform_at(3, 9));
  CHECK(s.gaussian_at(2, 5) == s.gaussian_at(2, 5));
  CHECK(s.uniform_at(3, 9) != s.uniform_at(3, 10));
  CHECK(s.uniform_at(3, 9) != s.uniform_at(4, 9));

  // Distinct stream ids, trials and seeds decorrelate.
  const RngStream t(42, 2, 7);
  const RngStream u(42, 1, 8);
  const RngStream v(43, 1, 7);
  CHECK(s.uniform_at(0, 0) != t.uniform_at(0, 0));
  CHECK(s.uniform_at(0, 0) != u.uniform_at(0, 0));
  CHECK(s.uniform_at(0, 0) != v.uniform_at(0, 0));
}

TEST_CASE("sequential draws replay from a copied stream") {
  RngStream a(9, 4, 0);
  double first[8];
  for (double& x : first) {
    x = a.next_uniform();
  }
  RngStream b(9, 4, 0);
  for (const double x : first) {
    CHECK(b.next_uniform() == x);
  }
  // Copying mid-way preserves the position.
  RngStream c(9, 4, 0);
  c.next_uniform();
  RngStream d = c;
  CHECK(c.next_uniform() == d.next_uniform());
}

TEST_CASE("uniform draws live in [0, 1) with the right mean") {
  RngStream s(12345, 6);
  const int n = 200000;
  double sum = 0.0;
  double lo = 1.0;
  double hi = 0.0;
  for (int i = 0; i < n; ++i) {
    const double u = s.next_uniform();
    sum += u;
    lo = std::min(lo, u);
    hi = std::max(hi, u);
  }
  CHECK(lo >= 0.0);
  CHECK(hi < 1.0);
  // 4 sigma band around 1/2, sigma = 1/sqrt(12 n).
  CHECK(std::abs(sum / n - 0.5) < 4.0 / std::sqrt(12.0 * n));
}

TEST_CASE("gaussian draws have standard moments") {
  RngStream s(2718, 5);
  const int n = 1000000;
  double sum = 0.0;
  double sq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double g = s.next_gaussian();
    sum += g;
    sq += g * g;
  }
  const double mean = sum / n;
  const double var = sq / n - mean * mean;
  CHECK(std::abs(mean) < 4.0 / std::sqrt(static_cast<double>(n)));
  CHECK(var == doctest::Approx(1.0).epsilon(0.02));
}
