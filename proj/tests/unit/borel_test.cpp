// Copyright 2026 The randbench Authors.
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <numeric>

#include "randbench/borel.hpp"
#include "randbench/error.hpp"
#include "test_util.hpp"

namespace randbench {
namespace {

using testing::RandomStream;

TEST(BorelTest, AlternatingSixteenBits) {
  BorelReport r = BorelNormality(FromAscii("0101010101010101"), 2);
  ASSERT_EQ(r.levels.size(), 2u);
  EXPECT_DOUBLE_EQ(r.levels[0].bound, 0.25);
  EXPECT_DOUBLE_EQ(r.levels[0].max_deviation, 0.0);
  EXPECT_TRUE(r.levels[0].pass);
  EXPECT_DOUBLE_EQ(r.levels[1].max_deviation, 0.75);
  EXPECT_FALSE(r.levels[1].pass);
  EXPECT_FALSE(r.all_pass);
}

TEST(BorelTest, AllZerosFails) {
  BorelReport r = BorelNormality(BitStream::FromBits(std::vector<std::uint8_t>(1024, 0)));
  EXPECT_DOUBLE_EQ(r.levels[0].bound, 0.1);
  EXPECT_DOUBLE_EQ(r.levels[0].max_deviation, 0.5);
  EXPECT_FALSE(r.levels[0].pass);
  EXPECT_FALSE(r.all_pass);
}

TEST(BorelTest, UniformWordSequencePasses) {
  // Every 3-bit word exactly once per 24 bits.
  BitWriter w;
  for (int rep = 0; rep < 40; ++rep) {
    for (unsigned j = 0; j < 8; ++j) w.PushBits(j, 3);
  }
  BorelReport r = BorelNormality(std::move(w).Finish(), 3);
  EXPECT_DOUBLE_EQ(r.levels[2].max_deviation, 0.0);
  EXPECT_TRUE(r.levels[2].pass);
}

TEST(BorelTest, CountsSumToWordCount) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + rng() % 5000;
    BorelReport r = BorelNormality(RandomStream(rng, n), 8);
    for (const BorelLevel& l : r.levels) {
      if (!l.applicable) {
        EXPECT_LT(n, std::size_t{1} << l.m);
        continue;
      }
      EXPECT_EQ(l.word_count, n / l.m);
      EXPECT_EQ(std::accumulate(l.counts.begin(), l.counts.end(), std::uint64_t{0}), l.word_count);
      EXPECT_EQ(l.pass, l.max_deviation <= l.bound);
    }
  }
}

TEST(BorelTest, ShortStreamsAndLevelRange) {
  BorelReport r = BorelNormality(FromAscii("0110"), 4);
  EXPECT_TRUE(r.levels[0].applicable);
  EXPECT_TRUE(r.levels[1].applicable);
  EXPECT_FALSE(r.levels[2].applicable);
  EXPECT_FALSE(r.levels[3].applicable);
  EXPECT_THROW(BorelNormality(FromAscii("01"), 0), ParameterError);
  EXPECT_THROW(BorelNormality(FromAscii("01"), 17), ParameterError);
}

TEST(BorelTest, RandomMegabitPassesFourLevels) {
  std::mt19937_64 rng(42);
  EXPECT_TRUE(BorelNormality(RandomStream(rng, 1'000'000), 4).all_pass);
}

}  // namespace
}  // namespace randbench
