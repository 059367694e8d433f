// SPDX-License-Identifier: Apache-2.0
#include "wetbeam/rng.hpp"

#include <cmath>
#include <numbers>

namespace wetbeam {
namespace {

constexpr std::uint32_t kPhiloxM0 = 0xD2511F53u;
constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57u;
constexpr std::uint32_t kPhiloxW0 = 0x9E3779B9u;
constexpr std::uint32_t kPhiloxW1 = 0xBB67AE85u;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi,
                    std::uint32_t& lo) {
  const std::uint64_t p = static_cast<std::uint64_t>(a) * b;
  hi = static_cast<std::uint32_t>(p >> 32);
  lo = static_cast<std::uint32_t>(p);
}

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

inline double u64_to_unit_open(std::uint64_t bits) {
  // (0, 1]: never returns 0, safe under log().
  return (static_cast<double>(bits >> 11) + 1.0) * 0x1.0p-53;
}

inline double u64_to_unit(std::uint64_t bits) {
  // [0, 1) with 53 bits.
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

}  // namespace

std::array<std::uint32_t, 4> philox4x32(const std::array<std::uint32_t, 4>& counter,
                                        const std::array<std::uint32_t, 2>& key) {
  std::array<std::uint32_t, 4> c = counter;
  std::uint32_t k0 = key[0];
  std::uint32_t k1 = key[1];
  for (int round = 0; round < 10; ++round) {
    std::uint32_t hi0, lo0, hi1, lo1;
    mulhilo(kPhiloxM0, c[0], hi0, lo0);
    mulhilo(kPhiloxM1, c[2], hi1, lo1);
    c = {hi1 ^ c[1] ^ k0, lo1, hi0 ^ c[3] ^ k1, lo0};
    k0 += kPhiloxW0;
    k1 += kPhiloxW1;
  }
  return c;
}

RngStream::RngStream(std::uint64_t seed, std::uint32_t stream_id, std::uint64_t trial) {
  const std::uint64_t mixed = splitmix64(splitmix64(seed) ^ (trial >> 32));
  key_ = {static_cast<std::uint32_t>(mixed), static_cast<std::uint32_t>(mixed >> 32)};
  prefix_ = {stream_id, static_cast<std::uint32_t>(trial)};
}

std::array<std::uint32_t, 4> RngStream::block_at(std::uint32_t a, std::uint32_t b) const {
  return philox4x32({prefix_[0], prefix_[1], a, b}, key_);
}

double RngStream::uniform_at(std::uint32_t a, std::uint32_t b) const {
  const auto blk = block_at(a, b);
  const std::uint64_t bits = (static_cast<std::uint64_t>(blk[0]) << 32) | blk[1];
  return u64_to_unit(bits);
}

double RngStream::gaussian_at(std::uint32_t a, std::uint32_t b) const {
  const auto blk = block_at(a, b);
  const std::uint64_t bits0 = (static_cast<std::uint64_t>(blk[0]) << 32) | blk[1];
  const std::uint64_t bits1 = (static_cast<std::uint64_t>(blk[2]) << 32) | blk[3];
  const double u1 = u64_to_unit_open(bits0);
  const double u2 = u64_to_unit(bits1);
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

double RngStream::next_uniform() {
  const std::uint64_t s = seq_++;
  return uniform_at(static_cast<std::uint32_t>(s >> 32), static_cast<std::uint32_t>(s));
}

double RngStream::next_gaussian() {
  const std::uint64_t s = seq_++;
  return gaussian_at(static_cast<std::uint32_t>(s >> 32), static_cast<std::uint32_t>(s));
}

}  // namespace wetbeam
