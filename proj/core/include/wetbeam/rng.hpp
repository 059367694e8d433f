// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>

namespace wetbeam {

/// One block of the Philox 4x32 counter-based generator (10 rounds).
/// Each (key, counter) pair maps to 128 independent pseudo-random bits, so
/// draws can be addressed rather than sequenced and Monte Carlo trials stay
/// bit-identical under any parallel execution order.
std::array<std::uint32_t, 4> philox4x32(const std::array<std::uint32_t, 4>& counter,
                                        const std::array<std::uint32_t, 2>& key);

/// A keyed, splittable random stream.
///
/// A stream is addressed by (seed, stream_id, trial). Within a stream, draws
/// are either addressed explicitly with uniform_at/gaussian_at(a, b) -- used
/// for per-(slot, mini-slot) noise so results do not depend on generation
/// order -- or taken sequentially via next_uniform/next_gaussian, which walk
/// a private 64-bit draw counter. Copying the stream copies its position.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint32_t stream_id, std::uint64_t trial = 0);

  /// Uniform double in [0, 1) with 53 random bits, addressed by (a, b).
  double uniform_at(std::uint32_t a, std::uint32_t b) const;
  /// Standard normal deviate addressed by (a, b).
  double gaussian_at(std::uint32_t a, std::uint32_t b) const;

  double next_uniform();
  double next_gaussian();

 private:
  std::array<std::uint32_t, 4> block_at(std::uint32_t a, std::uint32_t b) const;

  std::array<std::uint32_t, 2> key_;
  std::array<std::uint32_t, 2> prefix_;  // (stream_id, trial low word mixed with high)
  std::uint64_t seq_ = 0;
};

}  // namespace wetbeam
