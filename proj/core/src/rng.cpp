#include "baker/rng.hpp"

namespace baker {
namespace {

constexpr std::uint32_t kMul0 = 0xD2511F53u;
constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;
constexpr int kRounds = 10;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi,
                    std::uint32_t& lo) noexcept {
  const std::uint64_t product = static_cast<std::uint64_t>(a) * b;
  hi = static_cast<std::uint32_t>(product >> 32);
  lo = static_cast<std::uint32_t>(product);
}

}  // namespace

Philox4x32::Counter Philox4x32::apply(Counter ctr, Key key) noexcept {
  for (int round = 0; round < kRounds; ++round) {
    if (round > 0) {
      key[0] += kWeyl0;
      key[1] += kWeyl1;
    }
    std::uint32_t hi0, lo0, hi1, lo1;
    mulhilo(kMul0, ctr[0], hi0, lo0);
    mulhilo(kMul1, ctr[2], hi1, lo1);
    ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
  }
  return ctr;
}

// Counter layout: {block, stream, index_lo, index_hi}.
KeyedUniform::KeyedUniform(std::uint64_t seed, Stream stream, std::uint64_t index) noexcept
    : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
      ctr_{0u, static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(index),
           static_cast<std::uint32_t>(index >> 32)} {}

KeyedUniform::result_type KeyedUniform::operator()() noexcept {
  if (used_ == 2) {
    block_ = Philox4x32::apply(ctr_, key_);
    ++ctr_[0];
    used_ = 0;
  }
  const auto hi = static_cast<std::uint64_t>(block_[2 * used_]);
  const auto lo = static_cast<std::uint64_t>(block_[2 * used_ + 1]);
  ++used_;
  return (hi << 32) | lo;
}

}  // namespace baker
