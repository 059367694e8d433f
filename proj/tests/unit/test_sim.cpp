// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>
#include <sstream>

#include "wetbeam/angles.hpp"
#include "wetbeam/channel.hpp"
#include "wetbeam/codebook.hpp"
#include "wetbeam/rssi_sim.hpp"
#include "wetbeam/trace.hpp"

using namespace wetbeam;

TEST_CASE("noiseless RSSI values sit on the cosine curve") {
  RngStream rng(1, 1);
  const NoiseModel off{0.0};
  CHECK(simulate_rssi(PairParams{1, 1, 0}, 0.0, off, rng) == 2.0);
  CHECK(simulate_rssi(PairParams{1, 1, 0}, kPi, off, rng) ==
        doctest::Approx(0.0).epsilon(1e-15));
  CHECK(simulate_rssi(PairParams{2, 1, kPi / 4}, kPi / 4, off, rng) ==
        doctest::Approx(2.0).epsilon(1e-15));
  CHECK_THROWS_AS(simulate_rssi(PairParams{1, 1, 0}, 0.0, NoiseModel{-1.0}, rng),
                  std::invalid_argument);
}

TEST_CASE("noisy RSSI converges to the curve in mean and variance") {
  const PairParams p{1.4, 0.8, 0.6};
  const double theta = 1.1;
  const NoiseModel noise{0.49};
  RngStream rng(97, 1);
  const int n = 1000000;
  const double truth = rssi_mean(p, theta);
  double sum = 0.0;
  double sq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double r = simulate_rssi(p, theta, noise, rng) - truth;
    sum += r;
    sq += r * r;
  }
  const double mean = sum / n;
  CHECK(std::abs(mean) < 4.0 * std::sqrt(noise.sigma2) / std::sqrt(n));
  CHECK(sq / n - mean * mean == doctest::Approx(noise.sigma2).epsilon(0.02));
}

TEST_CASE("run_training produces the pairwise schedule") {
  const SystemParams sys(1.0, 2.0);
  SUBCASE("K = 2 degenerates to a single slot") {
    ChannelVector h({{1.0, 0.0}, {0.5, 0.5}});
    const TrainingTable t =
        run_training(h, make_theta(5), sys, NoiseModel{0.1}, RngStream(3, 1, 0));
    CHECK(t.records.size() == 5);
    for (const RssiRecord& r : t.records) {
      CHECK(r.slot == 2);
    }
  }
  SUBCASE("K = 3, N = 4 gives 8 records in slot-major order") {
    ChannelVector h({{1.0, 0.0}, {0.5, 0.5}, {0.0, 0.9}});
    const TrainingTable t =
        run_training(h, make_theta(4), sys, NoiseModel{0.1}, RngStream(3, 1, 0));
    REQUIRE(t.records.size() == 8);
    for (std::size_t i = 0; i < 8; ++i) {
      CHECK(t.records[i].slot == (i < 4 ? 2u : 3u));
      CHECK(t.records[i].mini_slot == i % 4 + 1);
    }
  }
  SUBCASE("noiseless records equal the derived curve exactly") {
    ChannelVector h({std::polar(1.2, 0.4), std::polar(0.7, -1.0)});
    const PhaseSet thetas = make_theta(6);
    const TrainingTable t =
        run_training(h, thetas, sys, NoiseModel{0.0}, RngStream(3, 1, 0));
    const PairParams pair = derive_pair_params(h.gain(0), h.gain(1), sys);
    for (std::size_t n = 0; n < 6; ++n) {
      CHECK(t.records[n].value == rssi_mean(pair, thetas.theta(n)));
    }
  }
  SUBCASE("every (slot, mini-slot) cell appears exactly once") {
    ChannelVector h({{1, 0}, {1, 1}, {0, 1}, {2, 0}, {0.5, 0.5}});
    const TrainingTable t =
        run_training(h, make_theta(7), sys, NoiseModel{1.0}, RngStream(8, 1, 0));
    CHECK(t.records.size() == 4 * 7);
    std::set<std::pair<unsigned, unsigned>> seen;
    for (const RssiRecord& r : t.records) {
      CHECK(seen.insert({r.slot, r.mini_slot}).second);
      CHECK(r.slot >= 2);
      CHECK(r.slot <= 5);
      CHECK(r.mini_slot >= 1);
      CHECK(r.mini_slot <= 7);
    }
  }
  SUBCASE("two seeds differ only in the noise") {
    ChannelVector h({{1.0, 0.0}, std::polar(1.0, 0.9)});
    const PhaseSet thetas = make_theta(10);
    const PairParams pair = derive_pair_params(h.gain(0), h.gain(1), sys);
    const double sigma2 = 0.81;
    for (const std::uint64_t seed : {11ull, 12ull}) {
      double sum = 0.0;
      double sq = 0.0;
      const int trials = 10000;
      for (int trial = 0; trial < trials; ++trial) {
        const TrainingTable t = run_training(h, thetas, sys, NoiseModel{sigma2},
                                             RngStream(seed, 1, trial));
        for (std::size_t n = 0; n < 10; ++n) {
          const double z = t.records[n].value - rssi_mean(pair, thetas.theta(n));
          sum += z;
          sq += z * z;
        }
      }
      const double count = 10.0 * trials;
      const double mean = sum / count;
      CHECK(std::abs(mean) < 4.0 * std::sqrt(sigma2) / std::sqrt(count));
      CHECK(sq / count - mean * mean == doctest::Approx(sigma2).epsilon(0.02));
    }
  }
}

TEST_CASE("training schedule shape") {
  const TrainingSchedule s{5, 7};
  CHECK(s.record_count() == 28);
  CHECK(TrainingSchedule{2, 3}.record_count() == 3);
  CHECK(TrainingSchedule::active_antennas(4) == std::pair<unsigned, unsigned>{1, 4});
}

TEST_CASE("training overhead bookkeeping") {
  const TrainingOverhead a = training_overhead(2, 3, 1.0, 1.0);
  CHECK(a.time == 3.0);
  CHECK(a.energy == 3.0);
  const TrainingOverhead b = training_overhead(10, 4, 0.5, 2.0);
  CHECK(b.time == 18.0);
  CHECK(b.energy == 72.0);
  const TrainingOverhead c = training_overhead(2, 0, 1.0, 1.0);
  CHECK(c.time == 0.0);
  CHECK(c.energy == 0.0);
  CHECK_THROWS_AS(training_overhead(1, 3, 1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(training_overhead(2, 3, 0.0, 1.0), std::invalid_argument);
}

TEST_CASE("trace round trip preserves the table") {
  ChannelVector h({{1.0, 0.2}, {0.4, -0.6}, {0.9, 0.1}});
  const TrainingTable t = run_training(h, make_theta(4), SystemParams(1.0, 2.0),
                                       NoiseModel{0.3}, RngStream(5, 1, 2));
  std::stringstream buf;
  write_trace(buf, t);
  const TrainingTable back = read_trace(buf);
  REQUIRE(back.records.size() == t.records.size());
  CHECK(back.antenna_count == t.antenna_count);
  for (std::size_t i = 0; i < t.records.size(); ++i) {
    CHECK(back.records[i].slot == t.records[i].slot);
    CHECK(back.records[i].mini_slot == t.records[i].mini_slot);
    CHECK(back.records[i].theta == t.records[i].theta);
    CHECK(back.records[i].value == t.records[i].value);
  }
}

TEST_CASE("trace reader reports precise failures") {
  SUBCASE("empty input") {
    std::stringstream buf("");
    CHECK_THROWS_WITH_AS(read_trace(buf), "empty trace", TraceFormatError);
  }
  SUBCASE("wrong header") {
    std::stringstream buf("a,b,c,d\n");
    CHECK_THROWS_AS(read_trace(buf), TraceFormatError);
  }
  SUBCASE("missing field carries the line number") {
    std::stringstream buf("slot,mini_slot,theta,rssi\n2,1,0.0\n");
    try {
      read_trace(buf);
      FAIL("expected TraceFormatError");
    } catch (const TraceFormatError& e) {
      CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
  }
  SUBCASE("non-numeric rssi") {
    std::stringstream buf("slot,mini_slot,theta,rssi\n2,1,0.0,abc\n");
    CHECK_THROWS_AS(read_trace(buf), TraceFormatError);
  }
  SUBCASE("duplicate cell") {
    std::stringstream buf(
        "slot,mini_slot,theta,rssi\n2,1,0.0,1.0\n2,1,0.0,1.5\n");
    try {
      read_trace(buf);
      FAIL("expected TraceFormatError");
    } catch (const TraceFormatError& e) {
      CHECK(std::string(e.what()).find("duplicate") != std::string::npos);
    }
  }
  SUBCASE("a gap names the missing cell") {
    std::stringstream buf(
        "slot,mini_slot,theta,rssi\n"
        "2,1,0.0,1.0\n2,3,4.1887902047863905,0.4\n");
    try {
      read_trace(buf);
      FAIL("expected TraceFormatError");
    } catch (const TraceFormatError& e) {
      const std::string what = e.what();
      CHECK(what.find("slot 2") != std::string::npos);
      CHECK(what.find("mini-slot 2") != std::string::npos);
    }
  }
  SUBCASE("slots must agree on the mini-slot phase") {
    std::stringstream buf(
        "slot,mini_slot,theta,rssi\n"
        "2,1,0.0,1.0\n3,1,0.5,1.0\n");
    CHECK_THROWS_AS(read_trace(buf), TraceFormatError);
  }
}
