// Copyright 2026 The randbench Authors.
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>

#include "randbench/error.hpp"
#include "randbench/lz76.hpp"
#include "randbench/toeplitz.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

namespace randbench {
namespace {

using testing::RandomStream;

TEST(Lz76Test, HandParsedValues) {
  EXPECT_EQ(Lz76Complexity(FromAscii("0101010101010101")), 3u);
  EXPECT_EQ(Lz76Complexity(FromAscii("00000000")), 2u);
  EXPECT_EQ(Lz76Complexity(FromAscii("0")), 1u);
  EXPECT_EQ(oracle::BruteForceLz76("0101010101010101"), 3u);
  EXPECT_EQ(oracle::BruteForceLz76("00000000"), 2u);
  EXPECT_EQ(oracle::BruteForceLz76("0"), 1u);
  EXPECT_THROW(Lz76Complexity(BitStream()), InputError);
}

TEST(Lz76Test, MatchesBruteForceOracle) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + rng() % 4096;
    BitStream s = RandomStream(rng, n);
    ASSERT_EQ(Lz76Complexity(s), oracle::BruteForceLz76(ToAscii(s))) << "trial " << trial << " n=" << n;
  }
}

TEST(Lz76Test, MatchesOracleOnStructuredStreams) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t period = 1 + rng() % 12;
    std::string unit = ToAscii(RandomStream(rng, period));
    std::string s;
    while (s.size() < 1 + rng() % 3000) s += unit;
    // Occasional flips keep it from being purely periodic.
    for (int f = 0; f < 3; ++f) {
      if (rng() % 2) s[rng() % s.size()] ^= 1;
    }
    ASSERT_EQ(Lz76Complexity(FromAscii(s)), oracle::BruteForceLz76(s)) << s.size();
  }
}

TEST(Lz76Test, NonDecreasingInPrefixLength) {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 50; ++trial) {
    BitStream s = RandomStream(rng, 1 + rng() % 4096);
    std::size_t prev = 0;
    for (std::size_t len = 1; len <= s.size(); len += 1 + rng() % 64) {
      const std::size_t c = Lz76Complexity(s.Prefix(len));
      ASSERT_GE(c, prev);
      ASSERT_LE(c, len);
      prev = c;
    }
  }
}

TEST(Lz76Test, NormalizationAndReports) {
  EXPECT_DOUBLE_EQ(NormalizedLz76(3, 16), 3.0 * 4.0 / 16.0);
  std::mt19937_64 rng(34);
  BitStream s = RandomStream(rng, 20000);
  Lz76Report self = KolmogorovReport(s, SeedReferenceFromStream("self", s));
  ASSERT_TRUE(self.relative_to_seed.has_value());
  EXPECT_DOUBLE_EQ(*self.relative_to_seed, 1.0);
  EXPECT_EQ(self.seed_label, "self");

  Lz76Report bare = KolmogorovReport(s);
  EXPECT_FALSE(bare.relative_to_seed.has_value());
  EXPECT_THROW(KolmogorovReport(FromAscii("1")), InputError);

  std::string periodic;
  for (int i = 0; i < 5000; ++i) periodic += "01";
  Lz76Report p = KolmogorovReport(FromAscii(periodic));
  EXPECT_EQ(p.phrase_count, 3u);
  EXPECT_NEAR(p.normalized, 3.0 * std::log2(10000.0) / 10000.0, 1e-12);
  EXPECT_LT(p.normalized, 0.01 * bare.normalized);

  SeedReference recorded = RecordedMtSeedReference();
  EXPECT_DOUBLE_EQ(recorded.normalized, 1.382);
  Lz76Report rel = KolmogorovReport(s, recorded);
  EXPECT_DOUBLE_EQ(*rel.relative_to_seed, rel.normalized / 1.382);
}

TEST(Lz76Test, MtReferenceRegeneratesSeedStream) {
  SeedReference ref = Mt19937SeedReference(19937, 50000);
  EXPECT_DOUBLE_EQ(ref.normalized, KolmogorovReport(Mt19937Bits(19937, 50000)).normalized);
  EXPECT_NEAR(ref.normalized, 1.0, 0.05);
}

}  // namespace
}  // namespace randbench
