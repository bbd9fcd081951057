#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "baker/rng.hpp"

namespace baker {
namespace {

// Known-answer vectors published with the Random123 reference implementation.
TEST(Philox4x32Test, KnownAnswers) {
  using C = Philox4x32::Counter;
  EXPECT_EQ(Philox4x32::apply({0, 0, 0, 0}, {0, 0}),
            (C{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8}));
  EXPECT_EQ(Philox4x32::apply({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff},
                              {0xffffffff, 0xffffffff}),
            (C{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd}));
  EXPECT_EQ(Philox4x32::apply({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344},
                              {0xa4093822, 0x299f31d0}),
            (C{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1}));
}

TEST(KeyedUniformTest, SameCoordinatesSameSequence) {
  KeyedUniform a(42, Stream::Future, 7);
  KeyedUniform b(42, Stream::Future, 7);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a(), b());
}

TEST(KeyedUniformTest, CoordinatesSeparateSequences) {
  std::set<std::uint64_t> firsts;
  firsts.insert(KeyedUniform(42, Stream::Future, 7)());
  firsts.insert(KeyedUniform(43, Stream::Future, 7)());
  firsts.insert(KeyedUniform(42, Stream::Past, 7)());
  firsts.insert(KeyedUniform(42, Stream::Future, 8)());
  firsts.insert(KeyedUniform(42, Stream::Future, std::uint64_t{8} << 32)());
  EXPECT_EQ(firsts.size(), 5u);
}

TEST(KeyedUniformTest, UniformMomentsAndRange) {
  KeyedUniform rng(1, Stream::Future, 0);
  constexpr int kDraws = 200'000;
  double sum = 0.0, sum_sq = 0.0;
  for (int i = 0; i < kDraws; ++i) {
    const double u = rng.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    sum += u;
    sum_sq += u * u;
  }
  // 5 sigma on the mean (sd 1/sqrt(12 n)) and on the second moment.
  EXPECT_NEAR(sum / kDraws, 0.5, 5.0 / std::sqrt(12.0 * kDraws));
  EXPECT_NEAR(sum_sq / kDraws, 1.0 / 3.0, 5.0 * 0.2981 / std::sqrt(kDraws));
}

}  // namespace
}  // namespace baker
