#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace baker {

/// Philox4x32-10 counter-based block cipher (Salmon et al., SC'11). Maps a
/// 128-bit counter and a 64-bit key to 128 pseudo-random bits; there is no
/// hidden state, so any draw can be recomputed from its coordinates alone.
struct Philox4x32 {
  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  static Counter apply(Counter ctr, Key key) noexcept;
};

/// Random stream identifiers. Distinct streams keyed by the same (seed, index)
/// are statistically independent.
enum class Stream : std::uint32_t {
  Future = 0,
  Past = 1,
  Pairs = 2,
};

/// Sequential uniform draws addressed by (seed, stream, index). Two instances
/// with the same coordinates produce identical sequences regardless of which
/// thread or in which order they are created.
class KeyedUniform {
 public:
  using result_type = std::uint64_t;

  KeyedUniform(std::uint64_t seed, Stream stream, std::uint64_t index) noexcept;

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() noexcept;

  /// Uniform double on [0, 1) with 53 random bits.
  double uniform() noexcept {
    return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
  }

 private:
  Philox4x32::Key key_;
  Philox4x32::Counter ctr_;
  Philox4x32::Counter block_{};
  int used_ = 2;
};

}  // namespace baker
