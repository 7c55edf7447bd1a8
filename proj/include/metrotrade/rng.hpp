#pragma once

#include <array>
#include <cstdint>

namespace metrotrade {

/// Philox4x32-10 counter-based generator.
///
/// A stream is identified by (seed, substream); the n-th output block is a
/// pure function of (seed, substream, n), so trials keyed by their index can
/// be evaluated in any order or concurrently with identical results.
class CounterRng {
 public:
  using result_type = std::uint32_t;
  using Block = std::array<std::uint32_t, 4>;

  CounterRng(std::uint64_t seed, std::uint64_t substream);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return 0xFFFFFFFFu; }

  result_type operator()();

  /// Uniform double in the open interval (0, 1) with 53 random bits.
  double uniform();

  /// Raw bijection: one Philox block for the given counter and key.
  static Block philox(Block counter, std::array<std::uint32_t, 2> key);

 private:
  void refill();

  std::array<std::uint32_t, 2> key_;
  std::uint64_t substream_;
  std::uint64_t block_index_ = 0;
  Block buffer_{};
  int cursor_ = 4;
};

}  // namespace metrotrade
